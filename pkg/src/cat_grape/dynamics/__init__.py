"""
Closed-system dynamics: piecewise-constant propagation, the coherent
state-transfer fidelity and its gradient with respect to every control sample.
"""

from .control_waveform import DEFAULT_DT_NS, ControlWaveform
from .gradient import GradientMethod, fidelity_gradient, overlap_gradient, propagator_derivative
from .propagation import (
    PropagationCache,
    propagate,
    step_hamiltonians,
    step_propagator,
    total_propagator,
    transfer_fidelity,
)
from .state_transfer_set import NORMALISATION_TOLERANCE, StateTransferSet

__all__ = [
    "DEFAULT_DT_NS",
    "NORMALISATION_TOLERANCE",
    "ControlWaveform",
    "GradientMethod",
    "PropagationCache",
    "StateTransferSet",
    "fidelity_gradient",
    "overlap_gradient",
    "propagate",
    "propagator_derivative",
    "step_hamiltonians",
    "step_propagator",
    "total_propagator",
    "transfer_fidelity",
]
