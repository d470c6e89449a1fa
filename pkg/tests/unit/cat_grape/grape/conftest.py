"""Shared fixtures for grape tests."""

import numpy as np
import pytest

from cat_grape.dynamics import StateTransferSet
from cat_grape.grape import BandLimit, OptimizationProblem, PenaltyWeights
from cat_grape.operators import HamiltonianModel, HilbertDims, basis_state


@pytest.fixture
def qubit_flip_problem():
    """Provide a factory for the transmon flip |0,g> -> |0,e> on the smallest truncation."""

    def _factory(steps: int = 20, dt: float = 2.0, **overrides) -> OptimizationProblem:
        dims = HilbertDims(n_osc=2, n_trans=2)
        transfers = StateTransferSet.from_pairs(dims, [(basis_state(dims, 0, 0), basis_state(dims, 0, 1))])
        settings = {
            "model": HamiltonianModel(),
            "transfers": transfers,
            "steps": steps,
            "dt": dt,
            "pads": (0,),
            "weights": PenaltyWeights(lambda_derivative=0.0),
            "band": BandLimit.full(dt),
            "initial_amplitude": 0.01,
        }
        settings.update(overrides)
        return OptimizationProblem(**settings)

    return _factory


@pytest.fixture
def random_parameters():
    def _factory(steps: int, seed: int = 11, scale: float = 0.2) -> np.ndarray:
        return np.random.default_rng(seed).normal(scale=scale, size=4 * steps)

    return _factory
