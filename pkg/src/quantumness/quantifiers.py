"""The three quantumness measures of a two-qubit state.

* Local quantum uncertainty (LQU): minimum Wigner-Yanase skew information
  -1/2 Tr([sqrt(rho), K]^2) over local observables K = (r.sigma) (x) 1.
* Local quantum Fisher information (LQFI): minimum quantum Fisher
  information over the same family of local generators.
* Coherence: square root of the quantum Jensen-Shannon divergence between
  rho and its computational-basis diagonal.

Each correlation measure has a generic spectral pipeline (exact: the
minimum over unit vectors r of a quadratic form is one minus the largest
eigenvalue of a 3x3 matrix) and an independent brute-force minimiser that
sweeps directions on a Fibonacci sphere, evaluates the defining formula
directly, and polishes locally.  The brute force exists to catch mistakes
in the generic pipeline and is held to +-1e-4 of it by the tests.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InternalConsistencyError, InvalidInputError
from .linalg import eig_hermitian, matrix_sqrt_psd, von_neumann_entropy
from .pauli import LOCAL_A

DEGENERACY_CUTOFF = 1e-12  # eigenvalue pairs with eta_i + eta_j below this are skipped


@dataclass(frozen=True)
class QuantifierResult:
    value: float
    method: str  # "generic", "brute_force" or "closed_form"


def _clip_unit(x: float) -> float:
    if x < -1e-9 or x > 1.0 + 1e-9:
        raise InternalConsistencyError(f"quantifier value {x} outside [0, 1]")
    return min(max(x, 0.0), 1.0)


# ---------------------------------------------------------------------------
# generic pipelines
# ---------------------------------------------------------------------------

def w_matrix(rho: np.ndarray) -> np.ndarray:
    """3x3 real symmetric W with W_ij = Tr(sqrt(rho) S_i sqrt(rho) S_j),
    S_i = sigma_i (x) 1."""
    r = matrix_sqrt_psd(rho)
    sandwiched = [r @ s @ r for s in LOCAL_A]
    w = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            w[i, j] = np.trace(sandwiched[i] @ LOCAL_A[j]).real
    return (w + w.T) / 2.0


def lqu_generic(rho: np.ndarray) -> QuantifierResult:
    """LQU = 1 - largest eigenvalue of W.

    The skew information of K = (r.sigma) (x) 1 equals 1 - r^T W r for a
    unit vector r, so the minimum over directions is exact.
    """
    lam_max = eig_hermitian(w_matrix(rho)).eigenvalues[0]
    return QuantifierResult(_clip_unit(1.0 - float(lam_max)), "generic")


def m_matrix(rho: np.ndarray) -> np.ndarray:
    """3x3 real symmetric M with
    M_kl = sum_{eta_i + eta_j > 0} 2 eta_i eta_j / (eta_i + eta_j)
           <i|S_k|j><j|S_l|i>.

    The sum runs over all eigenvalue pairs including i = j; dropping the
    diagonal pairs would make the result depend on the eigenbasis chosen
    inside degenerate eigenspaces and would break the pure-state limit.
    """
    sys = eig_hermitian(rho)
    eta = np.clip(sys.eigenvalues, 0.0, None)
    v = sys.eigenvectors
    s_tilde = np.stack([v.conj().T @ s @ v for s in LOCAL_A])

    pair_sum = eta[:, None] + eta[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        coef = np.where(
            pair_sum > DEGENERACY_CUTOFF,
            2.0 * eta[:, None] * eta[None, :] / pair_sum,
            0.0,
        )
    m = np.einsum("ij,aij,bji->ab", coef, s_tilde, s_tilde)
    m = m.real
    return (m + m.T) / 2.0


def lqfi_generic(rho: np.ndarray) -> QuantifierResult:
    """LQFI = 1 - largest eigenvalue of M (Tr(rho K^2) = 1 for unit r)."""
    lam_max = eig_hermitian(m_matrix(rho)).eigenvalues[0]
    return QuantifierResult(_clip_unit(1.0 - float(lam_max)), "generic")


def coherence_jsd(rho: np.ndarray) -> QuantifierResult:
    """Square root of S((rho + rho_d)/2) - (S(rho) + S(rho_d))/2 in bits,
    where rho_d is the computational-basis diagonal of rho.  Zero exactly
    when rho is diagonal."""
    rho = np.asarray(rho, dtype=complex)
    rho_d = np.diag(np.diag(rho))
    j = (
        von_neumann_entropy((rho + rho_d) / 2.0)
        - (von_neumann_entropy(rho) + von_neumann_entropy(rho_d)) / 2.0
    )
    return QuantifierResult(float(np.sqrt(max(j, 0.0))), "generic")


# ---------------------------------------------------------------------------
# brute-force minimisation oracles
# ---------------------------------------------------------------------------

def fibonacci_sphere(n: int) -> np.ndarray:
    """n approximately uniform unit vectors (golden-angle lattice)."""
    i = np.arange(n)
    z = 1.0 - (2.0 * i + 1.0) / n
    golden = np.pi * (3.0 - np.sqrt(5.0))
    phi = golden * i
    r = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
    return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])


def _direction(theta: float, phi: float) -> np.ndarray:
    return np.array(
        [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)]
    )


def _polish(objective, r0: np.ndarray, step: float = 0.05) -> float:
    """Pattern search over spherical coordinates down to 1e-10 steps."""
    theta = float(np.arccos(np.clip(r0[2], -1.0, 1.0)))
    phi = float(np.arctan2(r0[1], r0[0]))
    best = objective(_direction(theta, phi))
    while step > 1e-10:
        moved = False
        for dth, dph in ((step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)):
            cand = objective(_direction(theta + dth, phi + dph))
            if cand < best - 1e-16:
                best, theta, phi = cand, theta + dth, phi + dph
                moved = True
        if not moved:
            step /= 2.0
    return best


def _grid_minimum(objective_single, gram: np.ndarray, n_dirs: int) -> tuple[float, np.ndarray]:
    """Minimise the quadratic form r^T gram r over a Fibonacci grid.

    The fast bilinear evaluation is spot-checked against the direct
    per-direction formula on a subsample; disagreement means the bilinear
    reduction (or the formula) is wrong, so it raises.
    """
    dirs = fibonacci_sphere(n_dirs)
    vals = np.einsum("nk,kl,nl->n", dirs, gram, dirs)
    for idx in range(0, n_dirs, max(1, n_dirs // 40)):
        direct = objective_single(dirs[idx])
        if abs(direct - vals[idx]) > 1e-11:
            raise InternalConsistencyError(
                f"bilinear direction sweep deviates from direct evaluation by "
                f"{abs(direct - vals[idx]):.3e}"
            )
    k = int(np.argmin(vals))
    return float(vals[k]), dirs[k]


def lqu_brute_force(rho: np.ndarray, n_dirs: int = 20000) -> QuantifierResult:
    """Skew-information minimum by direction sweep plus local polish.

    Evaluates I(rho, K) = 1/2 ||[sqrt(rho), K]||_F^2 directly; the returned
    number always comes from the direct formula at the best direction.
    """
    if n_dirs < 1000:
        raise InvalidInputError(f"n_dirs must be >= 1000, got {n_dirs}")
    r = matrix_sqrt_psd(rho)
    comms = [r @ s - s @ r for s in LOCAL_A]

    def skew(direction: np.ndarray) -> float:
        c = direction[0] * comms[0] + direction[1] * comms[1] + direction[2] * comms[2]
        return 0.5 * float(np.sum(np.abs(c) ** 2))

    gram = 0.5 * np.array(
        [[np.sum(ci * cj.conj()).real for cj in comms] for ci in comms]
    )
    _, best_dir = _grid_minimum(skew, gram, n_dirs)
    return QuantifierResult(_clip_unit(_polish(skew, best_dir)), "brute_force")


def lqfi_brute_force(rho: np.ndarray, n_dirs: int = 20000) -> QuantifierResult:
    """Quantum-Fisher-information minimum by direction sweep plus polish.

    Evaluates F(rho, K) = 1/2 sum_{ij} (eta_i - eta_j)^2 / (eta_i + eta_j)
    |<i|K|j>|^2 directly (the symmetric-logarithmic-derivative form), which
    is a different route than the M-matrix assembly of the generic path.
    """
    if n_dirs < 1000:
        raise InvalidInputError(f"n_dirs must be >= 1000, got {n_dirs}")
    sys = eig_hermitian(rho)
    eta = np.clip(sys.eigenvalues, 0.0, None)
    v = sys.eigenvectors
    s_tilde = np.stack([v.conj().T @ s @ v for s in LOCAL_A])

    pair_sum = eta[:, None] + eta[None, :]
    diff = eta[:, None] - eta[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        coef = np.where(pair_sum > DEGENERACY_CUTOFF, diff**2 / pair_sum, 0.0)

    def qfi(direction: np.ndarray) -> float:
        k = (
            direction[0] * s_tilde[0]
            + direction[1] * s_tilde[1]
            + direction[2] * s_tilde[2]
        )
        return 0.5 * float(np.sum(coef * np.abs(k) ** 2))

    gram = 0.5 * np.einsum("ij,aij,bij->ab", coef, s_tilde, s_tilde.conj()).real
    gram = (gram + gram.T) / 2.0
    _, best_dir = _grid_minimum(qfi, gram, n_dirs)
    return QuantifierResult(_clip_unit(_polish(qfi, best_dir)), "brute_force")
