"""
Open-system simulation of synthesised pulses under the Lindblad master equation.
"""

from .decoherence import RATE_NAMES, DecoherenceSpec, dissipator
from .density_matrix import check_density_matrix, pure_density, state_fidelity
from .evolution import (
    DEFAULT_MAX_SUBSTEPS,
    DEFAULT_STEP_TOLERANCE,
    DEFAULT_SUBSTEPS,
    IntegratorMode,
    LindbladIntegrator,
    evolve_density,
)
from .logical_channel import (
    LOGICAL_INPUTS,
    LogicalChannel,
    dephasing_sensitivity,
    leaky_average_fidelity,
    simulate_logical_channel,
    simulated_gate_fidelity,
    simulated_transfer_fidelity,
    transmon_isometry,
)

__all__ = [
    "DEFAULT_MAX_SUBSTEPS",
    "DEFAULT_STEP_TOLERANCE",
    "DEFAULT_SUBSTEPS",
    "LOGICAL_INPUTS",
    "RATE_NAMES",
    "DecoherenceSpec",
    "IntegratorMode",
    "LindbladIntegrator",
    "LogicalChannel",
    "check_density_matrix",
    "dephasing_sensitivity",
    "dissipator",
    "evolve_density",
    "leaky_average_fidelity",
    "pure_density",
    "simulate_logical_channel",
    "simulated_gate_fidelity",
    "simulated_transfer_fidelity",
    "state_fidelity",
    "transmon_isometry",
]
