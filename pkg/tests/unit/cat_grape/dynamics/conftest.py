"""Shared fixtures for dynamics tests."""

import numpy as np
import pytest

from cat_grape.dynamics import ControlWaveform, StateTransferSet
from cat_grape.operators import HamiltonianModel, HilbertDims, basis_state, build_static_hamiltonian


@pytest.fixture
def random_problem():
    """Provide a factory for a random waveform, transfer set and static Hamiltonian."""

    def _factory(
        dims: HilbertDims | None = None,
        steps: int = 20,
        seed: int = 7,
        amplitude: float = 0.05,
    ):
        dims = dims or HilbertDims(n_osc=6, n_trans=2)
        rng = np.random.default_rng(seed)
        model = HamiltonianModel.from_megahertz(chi_mhz=-2.194, kerr_mhz=-0.0037, anharmonicity_mhz=-236.0)
        H0 = build_static_hamiltonian(model, dims)
        waveform = ControlWaveform(rng.normal(scale=amplitude, size=(steps, 4)), dt=2.0)
        target = rng.normal(size=dims.joint) + 1j * rng.normal(size=dims.joint)
        transfers = StateTransferSet.from_pairs(
            dims,
            [
                (basis_state(dims, 0, 0), target / np.linalg.norm(target)),
                (basis_state(dims, 1, 0), basis_state(dims, 2, 0)),
            ],
        )
        return waveform, transfers, H0

    return _factory
