import math
import re

import numpy as np
import pytest

from cat_grape.errors import InvalidControlError
from cat_grape.operators import (
    MHZ_TO_RAD_PER_NS,
    HamiltonianModel,
    HilbertDims,
    basis_state,
    build_drive_operators,
    build_static_hamiltonian,
    drive_hamiltonian,
    megahertz_to_angular,
)


class TestHamiltonianModel:
    def test_measured_parameters_are_converted_to_internal_units(self) -> None:
        model = HamiltonianModel.measured()

        assert model.chi == pytest.approx(-2.194 * 2 * math.pi * 1e-3)
        assert model.anh == pytest.approx(megahertz_to_angular(-236.0))
        assert model.t1_trans == pytest.approx(170e3)
        assert model.tphi_trans == pytest.approx(43e3)
        assert model.t1_osc == pytest.approx(2.7e6)

    def test_closed_model_keeps_couplings_and_drops_decoherence(self) -> None:
        closed = HamiltonianModel.measured().closed()

        assert closed.chi == pytest.approx(-2.194 * MHZ_TO_RAD_PER_NS)
        assert math.isinf(closed.t1_trans)
        assert math.isinf(closed.tphi_trans)
        assert math.isinf(closed.t1_osc)

    def test_fingerprint_is_stable_and_parameter_sensitive(self) -> None:
        model = HamiltonianModel.measured()

        assert model.fingerprint() == HamiltonianModel.measured().fingerprint()
        assert model.fingerprint() != model.closed().fingerprint()
        assert len(model.fingerprint()) == 16

    @pytest.mark.parametrize("field", ["t1_trans", "tphi_trans", "t1_osc"])
    def test_rejects_non_positive_times(self, field: str) -> None:
        with pytest.raises(ValueError, match=re.escape(f"{field} must be greater than zero.")):
            HamiltonianModel(**{field: 0.0})

    def test_rejects_non_finite_couplings(self) -> None:
        with pytest.raises(ValueError, match="chi must be finite"):
            HamiltonianModel(chi=math.nan)


def test_static_hamiltonian_diagonal_matches_closed_form(small_model: HamiltonianModel) -> None:
    dims = HilbertDims(n_osc=6, n_trans=3)
    H0 = build_static_hamiltonian(small_model, dims)
    n, m = 4, 2
    expected = (
        small_model.chi * n * m
        + 0.5 * small_model.kerr * n * (n - 1)
        + 0.5 * small_model.anh * m * (m - 1)
        + 0.5 * small_model.chi_prime * m * n * (n - 1)
    )

    np.testing.assert_allclose(H0, np.diag(np.diag(H0)))
    assert H0[dims.index(n, m), dims.index(n, m)].real == pytest.approx(expected)


def test_drive_operators_are_hermitian(small_dims: HilbertDims) -> None:
    for operator in build_drive_operators(small_dims):
        np.testing.assert_allclose(operator, operator.conj().T)


def test_transmon_quadrature_couples_ground_and_excited(small_dims: HilbertDims) -> None:
    drives = build_drive_operators(small_dims)
    H = drive_hamiltonian(drives, np.array([0.0, 0.0, 0.3, 0.0]))

    coupling = np.vdot(basis_state(small_dims, 1, 1), H @ basis_state(small_dims, 1, 0))

    assert coupling == pytest.approx(0.3)


@pytest.mark.parametrize(
    ("sample", "message"),
    [
        (np.zeros(3), "four components"),
        (np.array([0.0, np.nan, 0.0, 0.0]), "non-finite"),
    ],
)
def test_drive_hamiltonian_rejects_bad_samples(small_dims: HilbertDims, sample: np.ndarray, message: str) -> None:
    with pytest.raises(InvalidControlError, match=message):
        drive_hamiltonian(build_drive_operators(small_dims), sample)
