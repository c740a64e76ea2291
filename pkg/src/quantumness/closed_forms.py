"""Analytic closed-form expressions for both models, transcribed verbatim.

These formulas are *conformance targets*, not the shipped physics: the
numeric pipelines in dynamics/quantifiers/teleport are authoritative, and
the conformance runner compares every expression here against them and
records the deviations in CONFORMANCE.md.  Several expressions are known
to disagree (transcription defects such as a stray ``u v^2`` term, an
inconsistent radicand, a 1/188 prefactor); they are kept exactly as they
stand so the disagreement itself is documented.  Do not fix them here.

Evaluations run under errstate(ignore): singular points yield inf/nan,
which the conformance verdicts flag as "invalid".  Two dephasing-model
expressions have radicands that are negative for every physical parameter
choice (the W11/W22 normalizer and the squared coherence); those are
continued over the complex plane so the ledger still records a concrete
value, and ordering comparisons (1 - max{...}) then use real parts.
"""
from __future__ import annotations

import numpy as np

from .dynamics import JCStateElements, SQRT6, memory_envelope

LN2 = np.log(2.0)
LN16 = np.log(16.0)
LN240 = np.log(240.0)


def _xlnx(x: float) -> float:
    """x ln x with the entropy convention 0 ln 0 = 0; nan for x < 0."""
    if x == 0.0:
        return 0.0
    with np.errstate(invalid="ignore"):
        return float(x * np.log(x))


def _sqrt_clamped(x: float) -> float:
    """sqrt with rounding-level negatives clamped to 0; nan below that."""
    if not np.isfinite(x) or x < -1e-12:
        return float("nan")
    return float(np.sqrt(max(x, 0.0)))


# ---------------------------------------------------------------------------
# cavity model
# ---------------------------------------------------------------------------

def jc_static_mixture_elements(purity: float, alpha: float, gamma_t: float) -> JCStateElements:
    """Closed-form element variant that treats the maximally mixed component
    of the initial state as stationary.

    The exact dynamics (dynamics.jc_elements, backed by the unitary
    oracle) disagrees for purity < 1 because the mixed component is not a
    fixed point of the cavity evolution; at purity = 1 the two variants
    coincide.
    """
    dt = SQRT6 * gamma_t
    c = np.cos(dt)
    s = np.sin(dt)
    sa2 = np.sin(alpha) ** 2
    mix = (1.0 - purity) / 4.0
    u = mix + purity * sa2 * (2.0 + c) ** 2 / 9.0
    v = mix + purity * np.cos(alpha) ** 2 + 2.0 * purity / 9.0 * (c - 1.0) ** 2 * sa2
    w = purity * np.sin(2.0 * alpha) / 6.0 * (2.0 + c)
    z = purity / 6.0 * s**2 * sa2
    y = mix + z
    return JCStateElements(u=float(u), v=float(v), w=float(w), z=float(z), y=float(y))


def jc_quantifier_forms(purity: float, alpha: float, gamma_t: float) -> dict[str, float]:
    """Verbatim closed forms for the cavity-model W/M elements, spectrum,
    eigenvector ratios chi-/chi+, LQU, LQFI and coherence.

    ``chi_minus``/``chi_plus`` carry the expression as it stands (16 under
    the radical, 4*purity*... in the denominator); the ``_alt`` variants use
    the radicand and prefactor consistent with the printed eigenvalues.
    ``m11``..``m33`` use the former, ``m11_alt``..``m33_alt`` the latter.
    """
    el = jc_static_mixture_elements(purity, alpha, gamma_t)
    u, v, w, z, y = el.u, el.v, el.w, el.z, el.y
    dt = SQRT6 * gamma_t
    c = np.cos(dt)
    s2a = np.sin(2.0 * alpha)

    out: dict[str, float] = {}
    with np.errstate(all="ignore"):
        root_uv = np.sqrt(u * v - w**2)
        root_y = np.sqrt(y**2 - z**2)
        bracket = 2.0 * (y + root_y) * (u + v + 2.0 * root_uv)
        denom = np.sqrt(bracket)
        out["w11"] = (bracket + 4.0 * z * w + u * v**2) / denom
        out["w22"] = (bracket - 4.0 * z * w - u * v**2) / denom
        out["w33"] = (
            (u**2 - 4.0 * w**2) / (2.0 * (u + v + 2.0 * root_uv))
            + (v**2 - 4.0 * z**2) / (4.0 * (y + root_y))
            + (u + v) / 4.0
            + root_uv
            + root_y
            + y**2
        )
        out["lqu"] = 1.0 - max(out["w11"], out["w33"])

        eta1 = (1.0 - purity) / 4.0
        eta2 = eta1 + purity * np.sin(alpha) ** 2 * np.sin(dt) ** 2 / 3.0
        root_eta = np.sqrt(9.0 * (u - v) ** 2 + (2.0 + c) ** 2 * purity**2 * s2a**2)
        eta3 = 0.5 * (u + v - root_eta / 3.0)
        eta4 = 0.5 * (u + v + root_eta / 3.0)
        out.update(eta1=eta1, eta2=float(eta2), eta3=float(eta3), eta4=float(eta4))

        b16 = np.sqrt(9.0 * (u - v) ** 2 + 16.0 * purity**2 * (2.0 + c) ** 2 * s2a**2)
        denom_chi = 4.0 * purity * (2.0 + c) * s2a
        chi_m = (3.0 * (u - v) - b16) / denom_chi
        chi_p = (3.0 * (u - v) + b16) / denom_chi
        b1 = np.sqrt(9.0 * (u - v) ** 2 + purity**2 * (2.0 + c) ** 2 * s2a**2)
        denom_alt = purity * (2.0 + c) * s2a
        chi_m_alt = (3.0 * (u - v) - b1) / denom_alt
        chi_p_alt = (3.0 * (u - v) + b1) / denom_alt
        out.update(
            chi_minus=float(chi_m),
            chi_plus=float(chi_p),
            chi_minus_alt=float(chi_m_alt),
            chi_plus_alt=float(chi_p_alt),
        )

        for tag, cm, cp in (("", chi_m, chi_p), ("_alt", chi_m_alt, chi_p_alt)):
            t13 = 2.0 * eta1 * eta3 / ((eta1 + eta3) * (cm**2 + 1.0))
            t14 = 2.0 * eta1 * eta4 / ((eta1 + eta4) * (cp**2 + 1.0))
            t23 = 2.0 * eta2 * eta3 / ((eta2 + eta3) * (cm**2 + 1.0))
            t24 = 2.0 * eta2 * eta4 / ((eta2 + eta4) * (cp**2 + 1.0))
            out[f"m11{tag}"] = float(
                t13 * (cm - 1.0) ** 2
                + t14 * (cp - 1.0) ** 2
                + t23 * (cm + 1.0) ** 2
                + t24 * (cp + 1.0) ** 2
            )
            out[f"m22{tag}"] = float(
                t13 * (cm + 1.0) ** 2
                + t14 * (cp + 1.0) ** 2
                + t23 * (cm - 1.0) ** 2
                + t24 * (cp - 1.0) ** 2
            )
            out[f"m33{tag}"] = float(
                2.0
                * eta3
                * eta4
                * (cm * cp - 1.0) ** 2
                / ((eta3 + eta4) * (cm**2 + 1.0) * (cp**2 + 1.0))
            )
        out["lqfi"] = 1.0 - max(out["m11"], out["m33"])

        # Jensen-Shannon divergence assembled from the same element set;
        # the mixture eigenvalues x_j come from an explicit eigensolve of
        # (rho + rho_d)/2.
        rho = el.to_matrix()
        rho_d = np.diag(np.diag(rho))
        xs = np.linalg.eigvalsh((rho + rho_d) / 2.0).real
        j = (
            sum(_xlnx(e) for e in (eta1, float(eta2), float(eta3), float(eta4)))
            + _xlnx(u)
            + _xlnx(v)
            - 2.0 * sum(_xlnx(max(float(x), 0.0)) for x in xs)
            + 2.0 * _xlnx(y)
        ) / (2.0 * LN2)
        out["coherence"] = _sqrt_clamped(j)
    return out


def jc_teleport_forms(
    purity: float, alpha: float, gamma_t: float, theta: float, phi: float
) -> dict[str, complex]:
    """Verbatim closed forms for the cavity-model teleportation output
    elements, pointwise fidelity and sphere-averaged fidelity."""
    el = jc_static_mixture_elements(purity, alpha, gamma_t)
    u, v, w, z, y = el.u, el.v, el.w, el.z, el.y
    dt = SQRT6 * gamma_t
    sa2 = np.sin(alpha) ** 2

    out: dict[str, complex] = {}
    with np.errstate(all="ignore"):
        out["out_00"] = 2.0 * y * (u + v)
        out["out_01"] = (4.0 * y**2 + (u + v) ** 2) * np.sin(theta / 2.0) ** 2
        out["out_10"] = (4.0 * y**2 + (u + v) ** 2) * np.cos(theta / 2.0) ** 2
        out["out_0011"] = 4.0 * z * w * np.cos(phi) * np.sin(theta)
        out["out_0110"] = (
            2.0
            * purity
            * np.exp(-1j * phi)
            * (z**2 + w**2 * np.exp(2j * phi))
            * np.sin(theta)
        )

        f = (
            (
                6.0
                + 5.0 * purity
                + purity * np.cos(2.0 * alpha)
                + 2.0 * purity * np.cos(2.0 * dt) * sa2
            )
            ** 2
            * (1.0 + np.cos(alpha) ** 2)
            + 4.0
            * np.sin(theta) ** 2
            * (
                4.0 * purity**2 * (2.0 + np.cos(dt)) ** 2 * np.sin(2.0 * alpha) ** 2
                + (3.0 - 3.0 * purity + 2.0 * purity * np.sin(dt) ** 2 * sa2) ** 2
            )
        ) / 188.0
        out["fidelity"] = float(f)

        f_av = (
            purity
            * (
                4.0 / 9.0 * np.cos(dt) * np.sin(2.0 * alpha) ** 2
                - 5.0 * purity / 64.0 * np.cos(4.0 * alpha)
                + (6.0 + 19.0 * purity + 7.0 * purity * np.cos(2.0 * alpha)) / 108.0
                + purity / 72.0 * np.cos(4.0 * dt) * np.sin(alpha) ** 4
            )
            + 0.25
            + purity / 144.0 * (4.0 + 9.0 * purity) * np.cos(2.0 * alpha)
            + purity / 576.0 * (80.0 + 135.0 * purity)
            + purity**2 / 18.0 * np.sin(dt) ** 2 * np.sin(alpha) ** 6 * np.cos(2.0 * phi)
        )
        out["f_av"] = float(f_av)
    return out


# ---------------------------------------------------------------------------
# dephasing model
# ---------------------------------------------------------------------------

def dephasing_quantifier_forms(
    purity: float, alpha: float, a: float, tau: float, t: float
) -> dict[str, complex]:
    """Verbatim closed forms for the dephasing-model spectrum, eigenvector
    ratios eps-/eps+, M/W elements, LQU, LQFI and coherence.

    ``w11``/``w22`` and ``coherence`` evaluate to complex numbers: their
    radicands are negative for every physical parameter choice.
    """
    lam = memory_envelope(a, tau, t)
    s2a = np.sin(2.0 * alpha)
    c2a = np.cos(2.0 * alpha)
    c4a = np.cos(4.0 * alpha)

    out: dict[str, float] = {}
    with np.errstate(all="ignore"):
        l1 = (1.0 - purity) / 4.0
        root = np.sqrt(2.0 * purity**2 * (1.0 + c4a) + 4.0 * lam**2 * s2a**2)
        l3 = 0.25 * (1.0 + purity - root)
        l4 = 0.25 * (1.0 + purity + root)
        out.update(lambda1=l1, lambda2=l1, lambda3=float(l3), lambda4=float(l4))

        eps_root = purity * np.sqrt(lam**2 * s2a**2 + c2a**2)
        eps_m = (-c2a - eps_root) / (s2a * lam)
        eps_p = (-c2a + eps_root) / (s2a * lam)
        out.update(eps_minus=float(eps_m), eps_plus=float(eps_p))

        m11 = 4.0 * (l1 * l3 / (l1 + l3) + l1 * l4 / (l1 + l4))
        m33 = (
            4.0
            * l3
            * l4
            / (l3 + l4)
            * (eps_p * eps_m - 1.0) ** 2
            / ((eps_p**2 + 1.0) * (eps_m**2 + 1.0))
        )
        out.update(m11=float(m11), m22=float(m11), m33=float(m33))
        out["lqfi"] = 1.0 - max(out["m11"], out["m33"])

        sig = 1.0 + (2.0 - 3.0 * purity) * purity - 4.0 * purity**2 * (lam**2 - 1.0) * s2a**2
        theta_q = 2.0 * (purity - 1.0) * np.sqrt(sig) + 2.0 * (purity**2 - 1.0)
        # theta_q <= 0 for every purity in [0, 1]; continue the sqrt over C
        w11 = (theta_q**2 + purity**2 * lam**2 * s2a**2) / (4.0 * np.sqrt(complex(theta_q)))
        w33 = ((3.0 - purity + 2.0 * np.sqrt(sig)) ** 2 + 8.0 * purity**2 * lam**2 * s2a**2) / (
            8.0 * (3.0 - purity + 2.0 * np.sqrt(sig))
        )
        out.update(theta=float(theta_q), sigma=float(sig), w11=complex(w11), w22=complex(w11), w33=float(w33))
        with np.errstate(invalid="ignore"):
            out["lqu"] = 1.0 - max(complex(w11).real, float(w33))

        # coherence: each -+ pair is summed over both signs
        varpi = 2.0 * purity**2 * (4.0 + lam**2 + (4.0 - lam**2) * c4a)
        delta = 2.0 * purity**2 * (1.0 + lam**2 + (1.0 - lam**2) * c4a)
        qc2 = (purity - 1.0 - 2.0 * purity * np.cos(alpha) ** 2 + (1.0 + purity) * LN240) / (
            16.0 * LN16
        )
        qc2 -= purity * np.sin(alpha) ** 2 / 2.0
        for sign in (-1.0, +1.0):
            qc2 += (2.0 / LN16) * _xlnx((1.0 + purity + sign * 2.0 * purity * c2a) / 4.0)
            qc2 -= (2.0 / LN16) * _xlnx((2.0 + 2.0 * purity + sign * np.sqrt(varpi)) / 4.0)
            qc2 += (4.0 / LN16) * _xlnx((1.0 + purity + sign * np.sqrt(delta)) / 4.0)
        # the squared coherence comes out negative for physical parameters;
        # continue the square root over C so the ledger records a value
        out["coherence"] = complex(np.sqrt(complex(qc2)))
    return out


def dephasing_teleport_forms(
    purity: float, alpha: float, a: float, tau: float, t: float, theta: float, phi: float
) -> dict[str, complex]:
    """Verbatim closed forms for the dephasing-model teleportation output
    elements, pointwise fidelity and sphere-averaged fidelity."""
    lam = memory_envelope(a, tau, t)
    mix = (1.0 - purity) / 4.0
    a_el = mix + purity * np.sin(alpha) ** 2
    b_el = mix + purity * np.cos(alpha) ** 2
    c_el = purity / 2.0 * lam * np.sin(2.0 * alpha)
    d_el = mix

    out: dict[str, complex] = {}
    with np.errstate(all="ignore"):
        out["out_00"] = 2.0 * d_el * (a_el + b_el)
        out["out_01"] = 4.0 * d_el**2 * np.cos(theta / 2.0) ** 2 + (a_el + b_el) * np.sin(
            theta / 2.0
        ) ** 2
        out["out_0110"] = 2.0 * c_el**2 * np.exp(-1j * phi) * np.sin(theta)

        f = ((1.0 - purity) / 4.0) ** 2 * np.sin(theta) ** 2
        f += purity**2 * lam**2 / 2.0 * np.sin(2.0 * alpha) ** 2 * np.sin(theta) ** 2
        f += ((1.0 + purity) / 4.0) ** 2 * (1.0 + np.cos(theta) ** 2)
        out["fidelity"] = float(f)

        f_av = (2.0 / 3.0) * ((1.0 + purity) / 4.0) ** 2 + (1.0 / 3.0) * (
            ((1.0 - purity) / 4.0) ** 2
            + purity**2 * lam**2 / 2.0 * np.sin(2.0 * alpha) ** 2
        )
        out["f_av"] = float(f_av)
    return out
