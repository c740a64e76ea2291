"""Pauli operators and the fixed two-qubit computational basis.

The basis order everywhere in this package is |00>, |01>, |10>, |11>,
with the left (first) qubit playing the role of subsystem A.
"""
from __future__ import annotations

import numpy as np

BASIS_LABELS = ("00", "01", "10", "11")

SIGMA_0 = np.eye(2, dtype=complex)
SIGMA_1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_2 = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_3 = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

PAULIS = (SIGMA_0, SIGMA_1, SIGMA_2, SIGMA_3)

# sigma_i (x) 1_B for i = 1, 2, 3: the local observables on qubit A over
# which the quantumness measures are minimised.
LOCAL_A = tuple(np.kron(p, SIGMA_0) for p in (SIGMA_1, SIGMA_2, SIGMA_3))

# sigma_k (x) sigma_l for k, l = 0..3, indexed [k][l]: the sixteen
# conjugations of the generalized-depolarizing teleportation channel.
PAULI_PAIRS = tuple(tuple(np.kron(pk, pl) for pl in PAULIS) for pk in PAULIS)
