"""Shared fixtures for cat_grape unit tests."""

import numpy as np
import pytest

from cat_grape.operators import HamiltonianModel, HilbertDims


@pytest.fixture
def small_dims() -> HilbertDims:
    return HilbertDims(n_osc=4, n_trans=2)


@pytest.fixture
def small_model() -> HamiltonianModel:
    """A closed model with every static coupling switched on."""
    return HamiltonianModel.from_megahertz(
        chi_mhz=-2.194,
        kerr_mhz=-0.0037,
        chi_prime_mhz=-0.019,
        anharmonicity_mhz=-236.0,
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)
