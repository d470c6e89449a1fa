"""Tests for the L-BFGS-B pulse optimizer."""

import numpy as np
import pytest

from cat_grape.dynamics import StateTransferSet
from cat_grape.grape import OptimizerSettings, TerminationReason, optimize
from cat_grape.operators import HilbertDims, basis_state


def test_identity_problem_converges_before_the_first_step(qubit_flip_problem) -> None:
    dims = HilbertDims(n_osc=2, n_trans=2)
    identity = StateTransferSet.from_pairs(dims, [(basis_state(dims, 0, 0), basis_state(dims, 0, 0))])
    problem = qubit_flip_problem(initial_amplitude=0.0, transfers=identity)

    result = optimize(problem)

    assert result.iterations == 0
    assert result.reason is TerminationReason.FIDELITY_GOAL
    assert result.fidelity == pytest.approx(1.0)


def test_transmon_flip_reaches_high_fidelity(qubit_flip_problem) -> None:
    settings = OptimizerSettings(max_iter=200, fidelity_goal=1 - 1e-7, grad_tol=1e-12)

    result = optimize(qubit_flip_problem(), settings)

    assert result.fidelity > 1 - 1e-6
    assert result.iterations < 200
    assert result.goal_met


def test_cost_trace_never_decreases(qubit_flip_problem) -> None:
    result = optimize(qubit_flip_problem(), OptimizerSettings(max_iter=30, fidelity_goal=1.0))

    assert np.all(np.diff(result.trace) >= -1e-12)


def test_same_seed_gives_identical_trace(qubit_flip_problem) -> None:
    settings = OptimizerSettings(max_iter=15, fidelity_goal=1.0, seed=5)

    first = optimize(qubit_flip_problem(), settings)
    second = optimize(qubit_flip_problem(), settings)

    assert first.trace == second.trace
    np.testing.assert_array_equal(first.waveform.samples, second.waveform.samples)


def test_iteration_budget_is_reported(qubit_flip_problem) -> None:
    result = optimize(qubit_flip_problem(), OptimizerSettings(max_iter=2, fidelity_goal=1.0))

    assert result.reason is TerminationReason.MAX_ITERATIONS
    assert result.iterations <= 2
    assert not result.goal_met


@pytest.mark.parametrize(
    ("overrides", "message"),
    [
        ({"max_iter": -1}, "max_iter must not be negative"),
        ({"fidelity_goal": 1.5}, "fidelity_goal must lie in"),
        ({"memory_m": 0}, "memory_m must be at least 1"),
    ],
)
def test_settings_validation(overrides: dict, message: str) -> None:
    with pytest.raises(ValueError, match=message):
        OptimizerSettings(**overrides)
