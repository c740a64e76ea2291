"""Open two-qubit channel dynamics, quantumness measures, and teleportation fidelity."""

from .dynamics import (
    DephasingStateElements,
    JCStateElements,
    dephasing_elements,
    dephasing_kraus,
    dephasing_state,
    jc_elements,
    jc_state,
    jc_unitary_oracle,
    memory_envelope,
)
from .errors import (
    ConfigError,
    InternalConsistencyError,
    InvalidInputError,
    InvalidStateError,
    NotPSDError,
    QuantumnessError,
)
from .linalg import EigenSystem, eig_hermitian, matrix_sqrt_psd, state_fidelity, von_neumann_entropy
from .quantifiers import (
    QuantifierResult,
    coherence_jsd,
    lqfi_brute_force,
    lqfi_generic,
    lqu_brute_force,
    lqu_generic,
)
from .states import (
    StateDiagnostics,
    bell_projectors,
    bell_states,
    input_ket,
    input_state,
    validate,
    werner_like,
)
from .teleport import (
    TeleportChannel,
    TeleportReport,
    build_channel,
    fidelity_average,
    fidelity_pointwise,
    teleport_output,
    teleport_report,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "DephasingStateElements",
    "EigenSystem",
    "InternalConsistencyError",
    "InvalidInputError",
    "InvalidStateError",
    "JCStateElements",
    "NotPSDError",
    "QuantifierResult",
    "QuantumnessError",
    "StateDiagnostics",
    "TeleportChannel",
    "TeleportReport",
    "bell_projectors",
    "bell_states",
    "build_channel",
    "coherence_jsd",
    "dephasing_elements",
    "dephasing_kraus",
    "dephasing_state",
    "eig_hermitian",
    "fidelity_average",
    "fidelity_pointwise",
    "input_ket",
    "input_state",
    "jc_elements",
    "jc_state",
    "jc_unitary_oracle",
    "lqfi_brute_force",
    "lqfi_generic",
    "lqu_brute_force",
    "lqu_generic",
    "matrix_sqrt_psd",
    "memory_envelope",
    "state_fidelity",
    "teleport_output",
    "teleport_report",
    "validate",
    "von_neumann_entropy",
    "werner_like",
]
