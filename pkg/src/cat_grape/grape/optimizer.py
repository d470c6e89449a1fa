"""
Limited-memory quasi-Newton ascent on the GRAPE cost.

The optimisation runs SciPy's L-BFGS-B on the negated cost over the real
Fourier parameters. A callback records the cost after every accepted step and
stops the run as soon as the mean fidelity reaches the goal.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np
import scipy.optimize

from cat_grape.dynamics import ControlWaveform
from cat_grape.grape.band_limit import waveform_to_parameters
from cat_grape.grape.grape_cost import CostEvaluation, GrapeCost
from cat_grape.grape.optimization_problem import OptimizationProblem
from cat_grape.operators import HilbertDims

logger = logging.getLogger(__name__)


class TerminationReason(StrEnum):
    """Why an optimisation stopped."""

    FIDELITY_GOAL = "fidelity goal reached"
    GRADIENT_TOLERANCE = "gradient tolerance"
    COST_TOLERANCE = "cost tolerance"
    MAX_ITERATIONS = "max iterations"
    LINE_SEARCH_STALL = "line-search stall"


@dataclass(frozen=True, slots=True)
class OptimizerSettings:
    """
    Stopping rules and quasi-Newton memory.

    Attributes:
        max_iter: Maximum number of accepted quasi-Newton steps.
        grad_tol: Projected-gradient norm below which the run stops.
        fidelity_goal: Mean fidelity at which the run stops early.
        memory_m: Number of stored gradient pairs.
        seed: Seed of the initial-waveform noise.
        cost_tol: Relative cost reduction below which the run stops.
    """

    max_iter: int = 500
    grad_tol: float = 1e-9
    fidelity_goal: float = 0.999
    memory_m: int = 10
    seed: int = 0
    cost_tol: float = 1e-12

    def __post_init__(self) -> None:
        """Reject settings the optimizer cannot honour."""
        if self.max_iter < 0:
            raise ValueError("max_iter must not be negative.")
        if self.grad_tol < 0 or self.cost_tol < 0:
            raise ValueError("Tolerances must not be negative.")
        if not 0 < self.fidelity_goal <= 1:
            raise ValueError("fidelity_goal must lie in (0, 1].")
        if self.memory_m < 1:
            raise ValueError("memory_m must be at least 1.")


@dataclass(frozen=True, eq=False)
class OptimizationResult:
    """Converged waveform with a fidelity report and the iteration trace."""

    waveform: ControlWaveform
    parameters: np.ndarray
    truncations: tuple[HilbertDims, ...]
    fidelities: tuple[float, ...]
    penalties: dict[str, float]
    cost: float
    trace: tuple[float, ...]
    reason: TerminationReason
    iterations: int
    fidelity_goal: float
    fidelity_trace: tuple[float, ...] = field(default=())

    @property
    def fidelity(self) -> float:
        """Mean fidelity over the truncations."""
        return float(np.mean(self.fidelities))

    @property
    def discrepancy(self) -> float:
        """Largest fidelity difference between any two truncations."""
        return float(max(self.fidelities) - min(self.fidelities))

    @property
    def goal_met(self) -> bool:
        return self.fidelity >= self.fidelity_goal


def initial_parameters(problem: OptimizationProblem, settings: OptimizerSettings) -> np.ndarray:
    """
    Return the starting parameter vector.

    A supplied initial waveform is transformed directly. Otherwise complex
    Gaussian noise of the configured amplitude is drawn from a seeded generator
    in the time domain and transformed, so the band projection keeps only its
    in-band part.
    """
    if problem.initial_waveform is not None:
        return waveform_to_parameters(problem.initial_waveform)
    rng = np.random.default_rng(settings.seed)
    noise = rng.normal(size=(problem.steps, 4)) * problem.initial_amplitude
    return waveform_to_parameters(ControlWaveform(noise, dt=problem.dt))


class GrapeOptimizer:
    """Run L-BFGS-B ascent for one :class:`OptimizationProblem`."""

    def __init__(self, problem: OptimizationProblem, settings: OptimizerSettings | None = None) -> None:
        self._problem = problem
        self._settings = settings or OptimizerSettings()
        self._cost = GrapeCost(problem)

    @property
    def cost_function(self) -> GrapeCost:
        return self._cost

    def optimize(self) -> OptimizationResult:
        """
        Maximise the cost and return the best waveform found.

        Returns:
            The result re-evaluated at the final parameters. A failed line search
            returns the best point reached with reason ``line-search stall``.
        """
        settings = self._settings
        start = initial_parameters(self._problem, settings)
        first = self._cost.evaluate(start)
        trace = [first.cost]
        fidelity_trace = [first.mean_fidelity]
        logger.debug("iteration 0: cost %.12f mean fidelity %.12f", first.cost, first.mean_fidelity)
        if first.mean_fidelity >= settings.fidelity_goal or settings.max_iter == 0:
            reason = (
                TerminationReason.FIDELITY_GOAL
                if first.mean_fidelity >= settings.fidelity_goal
                else TerminationReason.MAX_ITERATIONS
            )
            return self._result(first, trace, fidelity_trace, reason, iterations=0)

        def objective(parameters: np.ndarray) -> tuple[float, np.ndarray]:
            evaluation = self._cost.evaluate(parameters)
            return -evaluation.cost, -evaluation.gradient

        goal_reached = False

        def callback(intermediate_result: scipy.optimize.OptimizeResult) -> None:
            nonlocal goal_reached
            evaluation = self._cost.evaluate(intermediate_result.x)
            trace.append(evaluation.cost)
            fidelity_trace.append(evaluation.mean_fidelity)
            logger.debug(
                "iteration %d: cost %.12f mean fidelity %.12f",
                len(trace) - 1,
                evaluation.cost,
                evaluation.mean_fidelity,
            )
            if evaluation.mean_fidelity >= settings.fidelity_goal:
                goal_reached = True
                raise StopIteration

        outcome = scipy.optimize.minimize(
            objective,
            start,
            jac=True,
            method="L-BFGS-B",
            callback=callback,
            options={
                "maxcor": settings.memory_m,
                "maxiter": settings.max_iter,
                "gtol": settings.grad_tol,
                "ftol": settings.cost_tol,
                "maxls": 40,
                "maxfun": max(15000, 20 * settings.max_iter),
            },
        )
        reason = self._termination_reason(outcome, goal_reached)
        final = self._cost.evaluate(outcome.x)
        logger.info(
            "GRAPE stopped after %d iterations (%s): mean fidelity %.9f",
            len(trace) - 1,
            reason.value,
            final.mean_fidelity,
        )
        return self._result(final, trace, fidelity_trace, reason, iterations=len(trace) - 1)

    def _termination_reason(self, outcome: scipy.optimize.OptimizeResult, goal_reached: bool) -> TerminationReason:
        if goal_reached:
            return TerminationReason.FIDELITY_GOAL
        message = str(outcome.message).upper()
        if outcome.status == 1 or "ITERATIONS" in message:
            return TerminationReason.MAX_ITERATIONS
        if "GRADIENT" in message:
            return TerminationReason.GRADIENT_TOLERANCE
        if outcome.status == 0:
            return TerminationReason.COST_TOLERANCE
        logger.warning("L-BFGS-B stopped abnormally: %s", outcome.message)
        return TerminationReason.LINE_SEARCH_STALL

    def _result(
        self,
        evaluation: CostEvaluation,
        trace: list[float],
        fidelity_trace: list[float],
        reason: TerminationReason,
        *,
        iterations: int,
    ) -> OptimizationResult:
        return OptimizationResult(
            waveform=evaluation.waveform,
            parameters=evaluation.parameters,
            truncations=self._problem.truncations,
            fidelities=evaluation.fidelities,
            penalties=dict(evaluation.penalties),
            cost=evaluation.cost,
            trace=tuple(trace),
            reason=reason,
            iterations=iterations,
            fidelity_goal=self._settings.fidelity_goal,
            fidelity_trace=tuple(fidelity_trace),
        )


def optimize(problem: OptimizationProblem, settings: OptimizerSettings | None = None) -> OptimizationResult:
    """Synthesise a waveform for ``problem``."""
    return GrapeOptimizer(problem, settings).optimize()
