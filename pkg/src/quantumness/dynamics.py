"""The two open-system channels acting on Werner-like two-qubit states.

Cavity model: two qubits exchange excitations with a shared single-mode
field that starts in vacuum (resonant, rotating-wave coupling).  The
evolved two-qubit state is available two ways: ``jc_state`` evaluates
closed-form matrix elements, and ``jc_unitary_oracle`` evolves the full
qubits (x) cavity density matrix under exp(-iHt) and traces the field out.
The closed form is derived from the oracle and the two agree to 1e-10
everywhere (enforced by the acceptance suite).

Dephasing model: each qubit sees random-telegraph (colored) phase noise
whose memory produces the damped-oscillatory envelope ``memory_envelope``.
The evolved state keeps its populations and multiplies the cross-qubit
coherences by the envelope; ``dephasing_state`` computes it both through a
Kraus conjugation and through the closed-form elements and insists the two
agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InternalConsistencyError, InvalidInputError
from .pauli import SIGMA_0, SIGMA_3
from .states import validate, werner_like, x_state

SQRT6 = np.sqrt(6.0)
SQRT2 = np.sqrt(2.0)


# ---------------------------------------------------------------------------
# cavity (vacuum-field) model
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JCStateElements:
    """Matrix elements of the evolved cavity-model state.

    Diagonal (u, y, y, v), corner w on |00><11|, corner z on |01><10|.
    """

    u: float
    v: float
    w: float
    z: float
    y: float

    def to_matrix(self) -> np.ndarray:
        return x_state(self.u, self.y, self.y, self.v, self.w, self.z)


def _check_jc_params(purity: float, alpha: float, gamma_t: float) -> None:
    if not 0.0 <= purity <= 1.0:
        raise InvalidInputError(f"purity must be in [0, 1], got {purity}")
    if not 0.0 <= alpha <= np.pi / 2:
        raise InvalidInputError(f"alpha must be in [0, pi/2], got {alpha}")
    if not np.isfinite(gamma_t) or gamma_t < 0.0:
        raise InvalidInputError(f"gamma_t must be finite and >= 0, got {gamma_t}")


def jc_elements(purity: float, alpha: float, gamma_t: float) -> JCStateElements:
    """Evolved-state elements of the cavity model at coupling-time gamma_t.

    The pure component of the initial mixture lives in the zero- and
    two-excitation sectors and oscillates at the collective frequency
    sqrt(6)*gamma; the maximally mixed component is *not* stationary: its
    single-excitation content oscillates at sqrt(2)*gamma.  Both sectors
    are included here, which is what makes these elements match the
    unitary oracle (the pure-component terms alone would not).
    """
    _check_jc_params(purity, alpha, gamma_t)
    dt = SQRT6 * gamma_t
    c = np.cos(dt)
    s = np.sin(dt)
    g = np.cos(SQRT2 * gamma_t) ** 2
    sa2 = np.sin(alpha) ** 2
    ca2 = np.cos(alpha) ** 2
    mix = 1.0 - purity

    u = purity * sa2 * (2.0 + c) ** 2 / 9.0 + mix * (2.0 + c) ** 2 / 36.0
    v = purity * (ca2 + 2.0 / 9.0 * (c - 1.0) ** 2 * sa2) + mix * (
        2.0 / 9.0 * (c - 1.0) ** 2 + 2.0 - g
    ) / 4.0
    w = purity * np.sin(alpha) * np.cos(alpha) * (2.0 + c) / 3.0
    z = purity * sa2 * s**2 / 6.0 + mix * (s**2 / 3.0 + g - 1.0) / 8.0
    y = purity * sa2 * s**2 / 6.0 + mix * (s**2 / 3.0 + g + 1.0) / 8.0
    return JCStateElements(u=float(u), v=float(v), w=float(w), z=float(z), y=float(y))


def jc_state(purity: float, alpha: float, gamma_t: float) -> np.ndarray:
    """Evolved two-qubit state of the cavity model (X-shaped density matrix)."""
    rho = jc_elements(purity, alpha, gamma_t).to_matrix()
    diag = validate(rho)
    if not diag.passed:
        raise InternalConsistencyError(
            f"cavity closed form produced an invalid state: {diag}"
        )
    return rho


@lru_cache(maxsize=8)
def _jc_coupling_eigensystem(n_fock: int) -> tuple[np.ndarray, np.ndarray]:
    """Eigensystem of the resonant coupling operator on qubits (x) Fock(n_fock).

    The coupling is a * sp_j + a^dag * sm_j summed over both qubits, where
    sp = |0><1| raises a qubit against one photon.  Time enters only as
    exp(-i * lambda * gamma_t).
    """
    sp = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    sm = sp.conj().T
    n = np.arange(1, n_fock)
    a = np.zeros((n_fock, n_fock), dtype=complex)
    a[n - 1, n] = np.sqrt(n)
    adag = a.conj().T
    eye2 = np.eye(2, dtype=complex)
    h = (
        np.kron(np.kron(sp, eye2), a)
        + np.kron(np.kron(sm, eye2), adag)
        + np.kron(np.kron(eye2, sp), a)
        + np.kron(np.kron(eye2, sm), adag)
    )
    vals, vecs = np.linalg.eigh(h)
    return vals, vecs


def jc_unitary_oracle(
    purity: float, alpha: float, gamma_t: float, n_fock: int = 3
) -> np.ndarray:
    """Reference evolution: conjugate by exp(-iHt) on qubits (x) cavity, trace the field.

    The cavity starts in vacuum.  n_fock = 3 is exact (at most two
    excitations are ever present); larger values must reproduce the same
    state, which the tests check.
    """
    _check_jc_params(purity, alpha, gamma_t)
    if n_fock < 3:
        raise InvalidInputError(f"n_fock must be >= 3, got {n_fock}")
    vals, vecs = _jc_coupling_eigensystem(n_fock)
    u = (vecs * np.exp(-1j * vals * gamma_t)) @ vecs.conj().T

    rho_ab = werner_like(purity, alpha)
    vac = np.zeros((n_fock, n_fock), dtype=complex)
    vac[0, 0] = 1.0
    rho_full = np.kron(rho_ab, vac)
    evolved = u @ rho_full @ u.conj().T
    # partial trace over the field (last factor)
    return np.einsum("ifjf->ij", evolved.reshape(4, n_fock, 4, n_fock))


# ---------------------------------------------------------------------------
# colored-noise dephasing model
# ---------------------------------------------------------------------------

def _check_dephasing_params(a: float, tau: float, t) -> None:
    if a <= 0.0:
        raise InvalidInputError(f"coupling a must be > 0, got {a}")
    if tau <= 0.0:
        raise InvalidInputError(f"tau must be > 0, got {tau}")
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0.0) or not np.all(np.isfinite(t_arr)):
        raise InvalidInputError("t must be finite and >= 0")


def memory_envelope(a: float, tau: float, t):
    """Coherence attenuation Lambda(xi, kappa) of the telegraph-noise bath.

    xi = t / (2 tau); kappa = sqrt((4 a tau)^2 - 1) in the oscillatory
    regime 4 a tau > 1, with the hyperbolic continuation below it and the
    analytic limit exp(-xi) (1 + xi) at 4 a tau = 1.  Equals 1 at t = 0
    and stays within [-1, 1] for all t >= 0.

    Accepts a scalar or array t.
    """
    _check_dephasing_params(a, tau, t)
    t_arr = np.asarray(t, dtype=float)
    xi = t_arr / (2.0 * tau)
    x = 4.0 * a * tau
    if abs(x - 1.0) <= 1e-9:
        lam = np.exp(-xi) * (1.0 + xi)
    elif x > 1.0:
        kappa = np.sqrt(x * x - 1.0)
        lam = np.exp(-xi) * (np.cos(kappa * xi) + np.sin(kappa * xi) / kappa)
    else:
        kappa = np.sqrt(1.0 - x * x)
        lam = np.exp(-xi) * (np.cosh(kappa * xi) + np.sinh(kappa * xi) / kappa)
    if np.isscalar(t) or np.asarray(t).ndim == 0:
        return float(lam)
    return lam


def dephasing_kraus(a: float, tau: float, t: float) -> tuple[np.ndarray, np.ndarray]:
    """Single-qubit Kraus pair (F1, F2) of the colored-noise dephasing channel.

    F1 = sqrt((1 + Lambda)/2) * 1, F2 = sqrt((1 - Lambda)/2) * sigma_3;
    F1^dag F1 + F2^dag F2 = 1 for every parameter value.
    """
    lam = float(np.clip(memory_envelope(a, tau, t), -1.0, 1.0))
    f1 = np.sqrt((1.0 + lam) / 2.0) * SIGMA_0
    f2 = np.sqrt((1.0 - lam) / 2.0) * SIGMA_3
    return f1, f2


def _two_qubit_dephasing_kraus(lam: float) -> tuple[np.ndarray, ...]:
    """Two-qubit Kraus set that fixes populations and multiplies the
    cross-qubit coherences |00><11| and |01><10| by lam.

    Weights (1+lam)/2, (1-lam)/4, (1-lam)/4 on 1(x)1, sigma3(x)1, 1(x)sigma3
    sum to one, so the map is completely positive and trace preserving for
    any lam in [-1, 1].
    """
    eye4 = np.eye(4, dtype=complex)
    z1 = np.kron(SIGMA_3, SIGMA_0)
    z2 = np.kron(SIGMA_0, SIGMA_3)
    return (
        np.sqrt((1.0 + lam) / 2.0) * eye4,
        np.sqrt((1.0 - lam) / 4.0) * z1,
        np.sqrt((1.0 - lam) / 4.0) * z2,
    )


@dataclass(frozen=True)
class DephasingStateElements:
    """Diagonal (A, D, D, B) and corner C on |00><11| of the dephased state."""

    a: float
    b: float
    c: float
    d: float

    def to_matrix(self) -> np.ndarray:
        return x_state(self.a, self.d, self.d, self.b, self.c, 0.0)


def dephasing_elements(
    purity: float, alpha: float, a: float, tau: float, t: float
) -> DephasingStateElements:
    """Closed-form elements of the dephased Werner-like state.

    Populations are frozen; the 00-11 coherence carries a single power of
    the memory envelope: C = (purity/2) * Lambda * sin(2 alpha).
    """
    if not 0.0 <= purity <= 1.0:
        raise InvalidInputError(f"purity must be in [0, 1], got {purity}")
    if not 0.0 <= alpha <= np.pi / 2:
        raise InvalidInputError(f"alpha must be in [0, pi/2], got {alpha}")
    lam = memory_envelope(a, tau, t)
    mix = (1.0 - purity) / 4.0
    return DephasingStateElements(
        a=float(mix + purity * np.sin(alpha) ** 2),
        b=float(mix + purity * np.cos(alpha) ** 2),
        c=float(purity / 2.0 * lam * np.sin(2.0 * alpha)),
        d=float(mix),
    )


def dephasing_state(
    purity: float, alpha: float, a: float, tau: float, t: float
) -> np.ndarray:
    """Dephased Werner-like state, computed through two redundant paths.

    The Kraus conjugation and the closed-form elements must agree to
    1e-10 entrywise; disagreement raises InternalConsistencyError.
    """
    elements = dephasing_elements(purity, alpha, a, tau, t)
    closed = elements.to_matrix()

    lam = float(np.clip(memory_envelope(a, tau, t), -1.0, 1.0))
    rho0 = werner_like(purity, alpha)
    kraus = np.zeros((4, 4), dtype=complex)
    for op in _two_qubit_dephasing_kraus(lam):
        kraus += op @ rho0 @ op.conj().T

    dev = float(np.max(np.abs(kraus - closed)))
    if dev > 1e-10:
        raise InternalConsistencyError(
            f"dephasing Kraus path deviates from closed form by {dev:.3e}"
        )
    return closed
