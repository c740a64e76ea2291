"""Reduced-resolution invariant suites behind the ``selftest`` subcommand.

Each suite re-runs a slice of the library's defining properties in well
under a minute total and prints one pass/fail line.  The full-resolution
versions live in the pytest suite.
"""
from __future__ import annotations

import tempfile
import time
from pathlib import Path

import numpy as np

from . import dynamics, linalg, quantifiers, states, teleport
from .cli import run_scenario
from .config import Scenario


def _random_density(rng: np.random.Generator, rank: int = 4) -> np.ndarray:
    g = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def _suite_linalg() -> str | None:
    rng = np.random.default_rng(11)
    for _ in range(20):
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        herm = (g + g.conj().T) / 2.0
        sys = linalg.eig_hermitian(herm)
        if np.max(np.abs(sys.reconstruct() - herm)) > 1e-10:
            return "eigendecomposition does not reconstruct"
        rho = _random_density(rng)
        root = linalg.matrix_sqrt_psd(rho)
        if np.max(np.abs(root @ root - rho)) > 1e-9:
            return "matrix sqrt squared misses the input"
    if abs(linalg.von_neumann_entropy(np.eye(4) / 4.0) - 2.0) > 1e-12:
        return "entropy of the maximally mixed state is not 2 bits"
    return None


def _suite_states() -> str | None:
    for purity in (0.0, 0.3, 0.7, 1.0):
        for alpha in (0.0, np.pi / 6, np.pi / 4, np.pi / 2):
            if not states.validate(states.werner_like(purity, alpha)).passed:
                return f"werner_like({purity}, {alpha}) fails validation"
    total = sum(states.bell_projectors())
    if np.max(np.abs(total - np.eye(4))) > 1e-12:
        return "Bell projectors do not resolve the identity"
    return None


def _suite_jc_oracle() -> str | None:
    worst = 0.0
    for purity in np.linspace(0.0, 1.0, 6):
        for alpha in np.linspace(0.0, np.pi / 2, 6):
            for gamma_t in np.linspace(0.0, 4.0 * np.pi / np.sqrt(6.0), 6):
                dev = np.max(
                    np.abs(
                        dynamics.jc_state(purity, alpha, gamma_t)
                        - dynamics.jc_unitary_oracle(purity, alpha, gamma_t)
                    )
                )
                worst = max(worst, float(dev))
    if worst > 1e-10:
        return f"cavity closed form deviates from the unitary oracle by {worst:.3e}"
    return None


def _suite_kraus() -> str | None:
    for a in (0.5, 1.0, 2.0):
        for tau in (0.1, 0.5, 1.0, 5.0):
            for t in np.linspace(0.0, 10.0, 40):
                f1, f2 = dynamics.dephasing_kraus(a, tau, float(t))
                total = f1.conj().T @ f1 + f2.conj().T @ f2
                if np.max(np.abs(total - np.eye(2))) > 1e-12:
                    return f"Kraus completeness fails at a={a}, tau={tau}, t={t}"
    return None


def _suite_dephasing() -> str | None:
    for purity in (0.0, 0.5, 1.0):
        for t in np.linspace(0.0, 8.0, 15):
            rho = dynamics.dephasing_state(purity, np.pi / 4, 1.0, 5.0, float(t))
            if not states.validate(rho).passed:
                return f"dephased state fails validation at purity={purity}, t={t}"
    return None


def _suite_quantifier_oracle() -> str | None:
    rng = np.random.default_rng(5)
    cases = [_random_density(rng) for _ in range(10)]
    cases += [_random_density(rng, rank=2) for _ in range(4)]
    cases.append(np.eye(4) / 4.0)
    cases.append(states.bell_projectors()[2])
    cases.append(dynamics.jc_state(1.0, np.pi / 3, 0.8))
    cases.append(dynamics.dephasing_state(0.5, np.pi / 4, 1.0, 5.0, 2.0))
    for rho in cases:
        lqu_g = quantifiers.lqu_generic(rho).value
        lqu_b = quantifiers.lqu_brute_force(rho, 2000).value
        if abs(lqu_g - lqu_b) > 1e-4:
            return f"LQU generic/brute-force gap {abs(lqu_g - lqu_b):.2e}"
        lqfi_g = quantifiers.lqfi_generic(rho).value
        lqfi_b = quantifiers.lqfi_brute_force(rho, 2000).value
        if abs(lqfi_g - lqfi_b) > 1e-4:
            return f"LQFI generic/brute-force gap {abs(lqfi_g - lqfi_b):.2e}"
    return None


def _suite_teleport() -> str | None:
    singlet = states.bell_projectors()[0]
    if abs(teleport.fidelity_average(teleport.build_channel(singlet)) - 1.0) > 1e-10:
        return "singlet resource does not teleport perfectly"
    mixed = np.eye(4, dtype=complex) / 4.0
    if abs(teleport.fidelity_average(teleport.build_channel(mixed)) - 0.25) > 1e-10:
        return "maximally mixed resource does not give 1/4"
    rng = np.random.default_rng(3)
    for _ in range(3):
        ch = teleport.build_channel(_random_density(rng))
        q = ch.q
        exact = q[0] ** 2 + q[3] ** 2 + (2.0 * q[0] * q[3] + (q[1] + q[2]) ** 2) / 3.0
        if abs(teleport.fidelity_average(ch) - exact) > 1e-11:
            return "quadrature average deviates from the exact sphere average"
    return None


def _suite_cli_determinism() -> str | None:
    scenario = Scenario(
        model="dephasing",
        purity=(1.0, 0.5),
        alpha=(np.pi / 4,),
        tau=(0.5,),
        time_stop=2.0,
        time_steps=9,
        teleport=True,
    )
    with tempfile.TemporaryDirectory() as tmp:
        p1, p2 = Path(tmp) / "a.csv", Path(tmp) / "b.csv"
        run_scenario(scenario, p1)
        run_scenario(scenario, p2)
        if p1.read_bytes() != p2.read_bytes():
            return "two identical runs produced different CSV bytes"
    return None


SUITES = (
    ("linalg", _suite_linalg),
    ("states", _suite_states),
    ("cavity-oracle", _suite_jc_oracle),
    ("kraus-completeness", _suite_kraus),
    ("dephasing-channel", _suite_dephasing),
    ("quantifier-oracle", _suite_quantifier_oracle),
    ("teleport-limits", _suite_teleport),
    ("cli-determinism", _suite_cli_determinism),
)


def run_selftest() -> int:
    failures = 0
    for name, suite in SUITES:
        start = time.perf_counter()
        detail = suite()
        elapsed = time.perf_counter() - start
        if detail is None:
            print(f"[ OK ] {name} ({elapsed:.1f}s)")
        else:
            failures += 1
            print(f"[FAIL] {name}: {detail}")
    if failures:
        print(f"{failures} suite(s) failed")
        return 1
    print("all suites passed")
    return 0
