"""
Total GRAPE cost and its gradient with respect to the Fourier parameters.

``cost = mean_k F_k - l_amp g_amp - l_der g_der - l_disc g_disc`` where ``F_k``
is the coherent transfer fidelity at truncation ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from cat_grape.dynamics import ControlWaveform, fidelity_gradient, propagate, transfer_fidelity
from cat_grape.grape.band_limit import (
    band_project,
    band_project_adjoint,
    coefficients_to_parameters,
    parameters_to_coefficients,
)
from cat_grape.grape.optimization_problem import OptimizationProblem
from cat_grape.grape.penalties import amplitude_penalty, derivative_penalty, discrepancy_penalty
from cat_grape.operators import build_drive_operators, build_static_hamiltonian


@dataclass(frozen=True, eq=False)
class CostEvaluation:
    """One evaluation of the cost at a parameter vector."""

    parameters: np.ndarray
    waveform: ControlWaveform
    cost: float
    gradient: np.ndarray
    fidelities: tuple[float, ...]
    penalties: dict[str, float]

    @property
    def mean_fidelity(self) -> float:
        return float(np.mean(self.fidelities))


class GrapeCost:
    """
    Evaluate the total cost of an :class:`OptimizationProblem`.

    Static Hamiltonians, drive operators and embedded transfer sets are built
    once per truncation. The most recent evaluation is remembered so repeated
    queries at the same point are free.
    """

    def __init__(self, problem: OptimizationProblem) -> None:
        self._problem = problem
        self._truncations = problem.truncations
        self._transfer_sets = problem.transfer_sets()
        self._static = tuple(build_static_hamiltonian(problem.model, dims) for dims in self._truncations)
        self._drives = tuple(np.asarray(build_drive_operators(dims)) for dims in self._truncations)
        self._last: CostEvaluation | None = None

    @property
    def problem(self) -> OptimizationProblem:
        return self._problem

    def waveform(self, parameters: np.ndarray) -> ControlWaveform:
        """Band-project a parameter vector onto the time grid."""
        return band_project(parameters_to_coefficients(parameters), self._problem.band, self._problem.dt)

    def fidelities(self, waveform: ControlWaveform) -> tuple[float, ...]:
        """Closed-system transfer fidelity at every truncation."""
        return tuple(
            transfer_fidelity(propagate(waveform, transfers, H0, drives=drives))
            for transfers, H0, drives in zip(self._transfer_sets, self._static, self._drives, strict=True)
        )

    def evaluate(self, parameters: np.ndarray) -> CostEvaluation:
        """Return cost, gradient, fidelities and penalties at ``parameters``."""
        parameters = np.asarray(parameters, dtype=float)
        if self._last is not None and np.array_equal(self._last.parameters, parameters):
            return self._last

        problem = self._problem
        weights = problem.weights
        waveform = self.waveform(parameters)
        fidelities: list[float] = []
        fidelity_gradients: list[np.ndarray] = []
        for transfers, H0, drives in zip(self._transfer_sets, self._static, self._drives, strict=True):
            cache = propagate(waveform, transfers, H0, drives=drives)
            fidelities.append(transfer_fidelity(cache))
            fidelity_gradients.append(
                fidelity_gradient(cache, H0, waveform, drives=drives, method=problem.gradient_method)
            )

        amplitude, amplitude_grad = amplitude_penalty(waveform, weights.caps)
        derivative, derivative_grad = derivative_penalty(waveform)
        if len(fidelities) > 1:
            discrepancy, discrepancy_grad = discrepancy_penalty(fidelities)
        else:
            discrepancy, discrepancy_grad = 0.0, np.zeros(1)

        count = len(fidelities)
        cost = (
            float(np.mean(fidelities))
            - weights.lambda_amplitude * amplitude
            - weights.lambda_derivative * derivative
            - weights.lambda_discrepancy * discrepancy
        )
        sample_gradient = -weights.lambda_amplitude * amplitude_grad - weights.lambda_derivative * derivative_grad
        for index, gradient in enumerate(fidelity_gradients):
            sample_gradient += (1.0 / count - weights.lambda_discrepancy * discrepancy_grad[index]) * gradient

        coefficient_gradient = band_project_adjoint(sample_gradient, problem.band, problem.dt)
        evaluation = CostEvaluation(
            parameters=parameters.copy(),
            waveform=waveform,
            cost=cost,
            gradient=coefficients_to_parameters(coefficient_gradient),
            fidelities=tuple(fidelities),
            penalties={"amplitude": amplitude, "derivative": derivative, "discrepancy": discrepancy},
        )
        self._last = evaluation
        return evaluation


def total_cost(problem: OptimizationProblem, parameters: np.ndarray) -> tuple[float, np.ndarray]:
    """Return the total cost and its gradient with respect to the real Fourier parameters."""
    evaluation = GrapeCost(problem).evaluate(parameters)
    return evaluation.cost, evaluation.gradient


def evaluate_waveform(problem: OptimizationProblem, waveform: ControlWaveform) -> tuple[float, ...]:
    """Re-evaluate the per-truncation fidelities of an existing waveform."""
    return GrapeCost(problem).fidelities(waveform)
