"""Dense complex Hermitian linear algebra for small matrices (dim <= 12).

Eigendecomposition, PSD matrix square root, von Neumann entropy (bits) and
Uhlmann state fidelity.  Everything is a pure function of its inputs; the
heavy lifting is delegated to LAPACK through numpy, behind the contracts
asserted by the test suite (descending eigenvalues, orthonormal columns,
reconstruction to 1e-10).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, InvalidStateError, NotPSDError

HERMITICITY_ATOL = 1e-12
TRACE_ATOL = 1e-10
PSD_CLAMP = 1e-8  # eigenvalues in [-PSD_CLAMP, 0) are treated as roundoff and clamped

MAX_DIM = 12


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues sorted descending and matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _as_square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidInputError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_DIM:
        raise InvalidInputError(f"dimension {m.shape[0]} exceeds supported maximum {MAX_DIM}")
    return m


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest absolute entry of m - m^dagger."""
    m = np.asarray(m, dtype=complex)
    return float(np.max(np.abs(m - m.conj().T)))


def _require_hermitian(m: np.ndarray, atol: float) -> np.ndarray:
    m = _as_square(m)
    defect = hermiticity_defect(m)
    if defect > atol:
        raise InvalidInputError(f"matrix is not Hermitian: defect {defect:.3e} > {atol:.1e}")
    return m


def eig_hermitian(m: np.ndarray, *, atol: float = 1e-10) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.

    Degenerate spectra return an arbitrary orthonormal basis of each
    eigenspace.  Raises InvalidInputError if the input is not Hermitian
    within ``atol``.
    """
    m = _require_hermitian(m, atol)
    vals, vecs = np.linalg.eigh(m)
    order = np.argsort(vals)[::-1]
    return EigenSystem(eigenvalues=vals[order].copy(), eigenvectors=vecs[:, order].copy())


def matrix_sqrt_psd(m: np.ndarray) -> np.ndarray:
    """Principal square root of a PSD Hermitian matrix.

    Eigenvalues in [-1e-8, 0) are clamped to zero (roundoff from
    closed-form channel states); anything more negative raises NotPSDError.
    """
    sys = eig_hermitian(m)
    vals = sys.eigenvalues
    if vals.min() < -PSD_CLAMP:
        raise NotPSDError(f"matrix is not PSD: min eigenvalue {vals.min():.3e}")
    vals = np.clip(vals, 0.0, None)
    v = sys.eigenvectors
    return (v * np.sqrt(vals)) @ v.conj().T


def _require_density(m: np.ndarray, *, trace_atol: float = 1e-8) -> np.ndarray:
    m = _require_hermitian(m, 1e-10)
    tr = float(np.trace(m).real)
    if abs(tr - 1.0) > trace_atol:
        raise InvalidStateError(f"trace deviates from 1 by {abs(tr - 1.0):.3e}")
    return m


def von_neumann_entropy(m: np.ndarray) -> float:
    """S(rho) = -Tr(rho log2 rho) in bits, with 0 log 0 = 0."""
    m = _require_density(m)
    vals = eig_hermitian(m).eigenvalues
    if vals.min() < -PSD_CLAMP:
        raise InvalidStateError(f"state is not PSD: min eigenvalue {vals.min():.3e}")
    vals = vals[vals > 0.0]
    return float(-np.sum(vals * np.log2(vals)))


def state_fidelity(a: np.ndarray, b: np.ndarray) -> float:
    """Uhlmann fidelity F(a, b) = (Tr sqrt(sqrt(a) b sqrt(a)))^2.

    Symmetric in its arguments and equal to |<psi_a|psi_b>|^2 when both
    states are pure.  Evaluated as the squared nuclear norm of
    sqrt(a) sqrt(b), which is the same number but avoids taking square
    roots of roundoff-level eigenvalues of the sandwiched product.
    """
    a = _require_density(a)
    b = _require_density(b)
    singulars = np.linalg.svd(matrix_sqrt_psd(a) @ matrix_sqrt_psd(b), compute_uv=False)
    f = float(np.sum(singulars) ** 2)
    return min(max(f, 0.0), 1.0)
