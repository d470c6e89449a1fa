"""
GRAPE pulse synthesis.

The cost averages the coherent transfer fidelity over several oscillator
truncations and subtracts amplitude, smoothness and truncation-discrepancy
penalties. Controls are parametrised by band-limited Fourier coefficients and
optimised with limited-memory quasi-Newton ascent.
"""

from .band_limit import (
    DEFAULT_BAND_EDGE,
    BandLimit,
    band_project,
    band_project_adjoint,
    coefficients_to_parameters,
    frequency_grid,
    parameters_to_coefficients,
    waveform_to_coefficients,
    waveform_to_parameters,
)
from .grape_cost import CostEvaluation, GrapeCost, evaluate_waveform, total_cost
from .optimization_problem import DEFAULT_INITIAL_AMPLITUDE, DEFAULT_PADS, OptimizationProblem
from .optimizer import (
    GrapeOptimizer,
    OptimizationResult,
    OptimizerSettings,
    TerminationReason,
    initial_parameters,
    optimize,
)
from .penalties import (
    DEFAULT_EPSILON_MAX,
    PenaltyWeights,
    amplitude_penalty,
    derivative_penalty,
    discrepancy_penalty,
)

__all__ = [
    "DEFAULT_BAND_EDGE",
    "DEFAULT_EPSILON_MAX",
    "DEFAULT_INITIAL_AMPLITUDE",
    "DEFAULT_PADS",
    "BandLimit",
    "CostEvaluation",
    "GrapeCost",
    "GrapeOptimizer",
    "OptimizationProblem",
    "OptimizationResult",
    "OptimizerSettings",
    "PenaltyWeights",
    "TerminationReason",
    "amplitude_penalty",
    "band_project",
    "band_project_adjoint",
    "coefficients_to_parameters",
    "derivative_penalty",
    "discrepancy_penalty",
    "evaluate_waveform",
    "frequency_grid",
    "initial_parameters",
    "optimize",
    "parameters_to_coefficients",
    "total_cost",
    "waveform_to_coefficients",
    "waveform_to_parameters",
]
