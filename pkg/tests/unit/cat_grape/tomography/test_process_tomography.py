"""Tests for six-state process tomography and average fidelities."""

import numpy as np
import pytest
from scipy.stats import unitary_group

from cat_grape.catcode import Gate
from cat_grape.errors import NonPhysicalChannelError
from cat_grape.tomography import (
    CARDINAL_STATES,
    PauliTransferMatrix,
    average_fidelity,
    bloch_coordinates,
    delta_fidelity,
    depolarizing_ptm,
    haar_average_fidelity,
    process_tomography,
    ptm_from_unitary,
    sampled_expectations,
)


def _unitary_channel(unitary: np.ndarray):
    return lambda rho: unitary @ rho @ unitary.conj().T


def test_unitary_channel_is_recovered_exactly() -> None:
    ptm = process_tomography(_unitary_channel(Gate.X180.unitary()))

    np.testing.assert_allclose(ptm.matrix, np.diag([1, 1, -1, -1]), atol=1e-12)


def test_sampled_tomography_converges_to_the_exact_matrix() -> None:
    ptm = process_tomography(_unitary_channel(Gate.H.unitary()), shots=20000, rng=np.random.default_rng(2))

    np.testing.assert_allclose(ptm.matrix, ptm_from_unitary(Gate.H.unitary()).matrix, atol=0.03)
    assert ptm.is_trace_preserving()


def test_sampled_tomography_needs_a_generator() -> None:
    with pytest.raises(ValueError, match="needs a seeded generator"):
        process_tomography(_unitary_channel(Gate.H.unitary()), shots=100)


def test_non_physical_output_is_rejected() -> None:
    with pytest.raises(NonPhysicalChannelError, match=r"Output for \+Z has trace"):
        process_tomography(lambda rho: 0.5 * rho)


def test_bloch_coordinates_of_cardinal_states() -> None:
    plus_y = CARDINAL_STATES["+Y"]

    np.testing.assert_allclose(bloch_coordinates(np.outer(plus_y, plus_y.conj())), [1, 0, 1, 0], atol=1e-12)


def test_sampled_expectations_stay_in_range() -> None:
    estimates = sampled_expectations(np.array([1.0, -1.0, 0.0]), 100, np.random.default_rng(0))

    assert estimates[0] == 1.0
    assert estimates[1] == -1.0
    assert -1.0 <= estimates[2] <= 1.0


def test_sampled_expectations_need_shots() -> None:
    with pytest.raises(ValueError, match="shots must be at least 1"):
        sampled_expectations(np.zeros(3), 0, np.random.default_rng(0))


class TestAverageFidelity:
    def test_identical_channels_have_unit_fidelity(self) -> None:
        ptm = ptm_from_unitary(Gate.Y90.unitary())

        assert average_fidelity(ptm, ptm) == pytest.approx(1.0)

    @pytest.mark.parametrize("probability", [0.0, 0.05, 0.2])
    def test_depolarizing_channel(self, probability: float) -> None:
        fidelity = average_fidelity(depolarizing_ptm(probability), PauliTransferMatrix.identity())

        assert fidelity == pytest.approx(1 - probability / 2)

    def test_haar_sampling_agrees_with_the_closed_form(self) -> None:
        channel = depolarizing_ptm(0.2).apply

        estimate = haar_average_fidelity(channel, np.eye(2), samples=2000, rng=np.random.default_rng(3))

        assert estimate == pytest.approx(0.9, abs=0.01)

    def test_common_change_of_basis_leaves_fidelity_unchanged(self) -> None:
        damping = 0.1
        amplitude_damping = PauliTransferMatrix(
            np.array(
                [
                    [1.0, 0.0, 0.0, 0.0],
                    [0.0, np.sqrt(1 - damping), 0.0, 0.0],
                    [0.0, 0.0, np.sqrt(1 - damping), 0.0],
                    [damping, 0.0, 0.0, 1 - damping],
                ]
            )
        )
        ideal = ptm_from_unitary(Gate.X90.unitary())
        measured = ideal.then(amplitude_damping).then(depolarizing_ptm(0.03))
        rng = np.random.default_rng(21)

        for basis_change in unitary_group.rvs(2, size=10, random_state=rng):
            forward = ptm_from_unitary(basis_change)
            backward = ptm_from_unitary(basis_change.conj().T)

            rotated = average_fidelity(backward.then(measured).then(forward), backward.then(ideal).then(forward))

            assert rotated == pytest.approx(average_fidelity(measured, ideal), abs=1e-9)

    def test_leaky_channels_are_rejected(self) -> None:
        with pytest.raises(NonPhysicalChannelError):
            average_fidelity(PauliTransferMatrix(np.diag([0.9, 1, 1, 1])), PauliTransferMatrix.identity())

    def test_delta_fidelity_removes_the_bracket(self) -> None:
        bracket = depolarizing_ptm(0.04)
        gate = ptm_from_unitary(Gate.X90.unitary())
        full = bracket.then(gate)

        delta = delta_fidelity(full, bracket, gate)

        assert delta == pytest.approx(average_fidelity(full, gate) - 0.98)
        assert delta == pytest.approx(0.0, abs=1e-12)
