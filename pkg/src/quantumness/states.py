"""Construction and validation of the two-qubit states used throughout.

Werner-like initial states, the Bell basis (ordered to pair index-wise
with the Pauli corrections of the teleport module), the pure input state
of the teleportation protocol, and the density-matrix diagnostics.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .linalg import eig_hermitian, hermiticity_defect

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-10
MIN_EIG_TOL = -1e-10


def werner_like(purity: float, alpha: float) -> np.ndarray:
    """Mixture purity * |phi><phi| + (1 - purity)/4 * 1 with
    |phi> = sin(alpha)|00> + cos(alpha)|11>.

    purity in [0, 1], alpha in [0, pi/2] radians.
    """
    if not 0.0 <= purity <= 1.0:
        raise InvalidInputError(f"purity must be in [0, 1], got {purity}")
    if not 0.0 <= alpha <= np.pi / 2:
        raise InvalidInputError(f"alpha must be in [0, pi/2], got {alpha}")
    phi = np.array([np.sin(alpha), 0.0, 0.0, np.cos(alpha)], dtype=complex)
    return purity * np.outer(phi, phi.conj()) + (1.0 - purity) / 4.0 * np.eye(4, dtype=complex)


def bell_states() -> tuple[np.ndarray, ...]:
    """The four Bell vectors (psi-, phi-, phi+, psi+).

    The order matters: index k pairs with Pauli correction sigma_k in the
    teleportation channel, and index 0 (the singlet) transports perfectly.
    """
    s = 1.0 / np.sqrt(2.0)
    psi_minus = np.array([0.0, s, -s, 0.0], dtype=complex)
    phi_minus = np.array([s, 0.0, 0.0, -s], dtype=complex)
    phi_plus = np.array([s, 0.0, 0.0, s], dtype=complex)
    psi_plus = np.array([0.0, s, s, 0.0], dtype=complex)
    return psi_minus, phi_minus, phi_plus, psi_plus


def bell_projectors() -> tuple[np.ndarray, ...]:
    """Rank-1 projectors onto the Bell vectors, in the same order."""
    return tuple(np.outer(v, v.conj()) for v in bell_states())


def input_ket(theta: float, phi: float) -> np.ndarray:
    """cos(theta/2)|10> + e^{-i phi} sin(theta/2)|01>, theta in [0, pi], phi in [0, 2 pi]."""
    if not 0.0 <= theta <= np.pi:
        raise InvalidInputError(f"theta must be in [0, pi], got {theta}")
    if not 0.0 <= phi <= 2.0 * np.pi:
        raise InvalidInputError(f"phi must be in [0, 2*pi], got {phi}")
    return np.array(
        [0.0, np.exp(-1j * phi) * np.sin(theta / 2.0), np.cos(theta / 2.0), 0.0],
        dtype=complex,
    )


def input_state(theta: float, phi: float) -> np.ndarray:
    """Projector onto input_ket(theta, phi); support only on {|01>, |10>}."""
    v = input_ket(theta, phi)
    return np.outer(v, v.conj())


def x_state(d00: float, d01: float, d10: float, d11: float, w: float, z: float) -> np.ndarray:
    """Assemble an X-shaped density matrix.

    Diagonal (d00, d01, d10, d11), real corner w on |00><11| and real
    corner z on |01><10|.
    """
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0], rho[1, 1], rho[2, 2], rho[3, 3] = d00, d01, d10, d11
    rho[0, 3] = rho[3, 0] = w
    rho[1, 2] = rho[2, 1] = z
    return rho


@dataclass(frozen=True)
class StateDiagnostics:
    """Deviations of a candidate matrix from the density-matrix contract."""

    hermiticity_defect: float
    trace_defect: float
    min_eigenvalue: float

    @property
    def passed(self) -> bool:
        return (
            self.hermiticity_defect <= HERMITICITY_TOL
            and self.trace_defect <= TRACE_TOL
            and self.min_eigenvalue >= MIN_EIG_TOL
        )


def validate(rho: np.ndarray) -> StateDiagnostics:
    """Diagnostics for the DensityMatrix contract; never raises."""
    rho = np.asarray(rho, dtype=complex)
    herm = hermiticity_defect(rho)
    trace_defect = abs(float(np.trace(rho).real) - 1.0)
    sym = (rho + rho.conj().T) / 2.0
    min_eig = float(eig_hermitian(sym).eigenvalues.min())
    return StateDiagnostics(herm, trace_defect, min_eig)
