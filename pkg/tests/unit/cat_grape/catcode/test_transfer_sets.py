"""Tests for the target transfer sets of every synthesised operation."""

import math

import numpy as np
import pytest

from cat_grape.catcode import (
    Gate,
    LogicalBasis,
    decode_transfer_set,
    default_parity_probes,
    encode_transfer_set,
    fock_preparation_set,
    free_kerr_unitary,
    gate_transfer_set,
    kerr_correction_target,
    parity_map_set,
    parity_map_unitary,
)
from cat_grape.operators import HamiltonianModel, HilbertDims, basis_state


def _completed_unitary(sources: np.ndarray, images: np.ndarray) -> np.ndarray:
    """Extend the orthonormal columns ``sources -> images`` to a full unitary."""
    dimension = sources.shape[0]
    filler = np.random.default_rng(0).normal(size=(dimension, dimension - sources.shape[1]))

    def _complete(columns: np.ndarray) -> np.ndarray:
        q, r = np.linalg.qr(np.column_stack([columns, filler]))
        return q * (np.diag(r) / np.abs(np.diag(r)))

    return _complete(images) @ _complete(sources).conj().T


def _coherent_fidelity(unitary: np.ndarray, initial: np.ndarray, targets: np.ndarray) -> float:
    overlaps = [np.vdot(target, unitary @ state) for state, target in zip(initial, targets, strict=True)]
    return abs(np.mean(overlaps)) ** 2


class TestEncodeDecode:
    def test_encode_maps_transmon_states_to_codewords(self, basis: LogicalBasis) -> None:
        transfers = encode_transfer_set(basis)

        assert transfers.size == 2
        np.testing.assert_allclose(transfers.initial[1], basis_state(basis.dims, 0, 1))
        np.testing.assert_allclose(transfers.targets[0], basis.plus_z)
        np.testing.assert_allclose(transfers.targets[1], basis.minus_z)

    def test_completed_encode_unitary_has_unit_fidelity(self, basis: LogicalBasis) -> None:
        transfers = encode_transfer_set(basis)

        unitary = _completed_unitary(transfers.initial.T, transfers.targets.T)

        np.testing.assert_allclose(unitary.conj().T @ unitary, np.eye(basis.dims.joint), atol=1e-10)
        assert _coherent_fidelity(unitary, transfers.initial, transfers.targets) == pytest.approx(1.0, abs=1e-10)

    def test_decode_is_the_reverse_of_encode(self, basis: LogicalBasis) -> None:
        decode = decode_transfer_set(basis)

        np.testing.assert_allclose(decode.initial, encode_transfer_set(basis).targets)


class TestGateTransferSet:
    def test_identity_targets_equal_inputs(self, basis: LogicalBasis) -> None:
        transfers = gate_transfer_set(basis, Gate.I)

        np.testing.assert_allclose(transfers.targets, transfers.initial)

    def test_x180_swaps_codewords_up_to_a_common_phase(self, basis: LogicalBasis) -> None:
        transfers = gate_transfer_set(basis, "X180")

        np.testing.assert_allclose(transfers.targets[0], -1j * basis.minus_z, atol=1e-12)
        np.testing.assert_allclose(transfers.targets[1], -1j * basis.plus_z, atol=1e-12)

    def test_t_gate_adds_a_quarter_phase_to_minus_z(self, basis: LogicalBasis) -> None:
        transfers = gate_transfer_set(basis, Gate.T)

        np.testing.assert_allclose(transfers.targets[0], basis.plus_z)
        np.testing.assert_allclose(transfers.targets[1], np.exp(1j * math.pi / 4) * basis.minus_z, atol=1e-12)

    @pytest.mark.parametrize(
        ("first", "second"),
        [(Gate.X90, Gate.Y90), (Gate.H, Gate.T), (Gate.MY90, Gate.X180)],
    )
    def test_composition_follows_the_logical_product(self, basis: LogicalBasis, first: Gate, second: Gate) -> None:
        isometry = basis.isometry()
        logical_second = isometry @ second.unitary() @ isometry.conj().T

        composed = gate_transfer_set(basis, first).targets @ logical_second.T

        np.testing.assert_allclose(composed, (isometry @ second.unitary() @ first.unitary()).T, atol=1e-12)


class TestFockPreparation:
    def test_zero_target_is_the_identity_transfer(self) -> None:
        dims = HilbertDims(n_osc=10)

        transfers = fock_preparation_set(dims, 0)

        np.testing.assert_allclose(transfers.targets, transfers.initial)

    def test_six_photon_target(self) -> None:
        dims = HilbertDims(n_osc=12)

        transfers = fock_preparation_set(dims, 6)

        np.testing.assert_allclose(transfers.targets[0], basis_state(dims, 6, 0))

    def test_out_of_range_target_raises(self) -> None:
        with pytest.raises(ValueError, match="outside the truncation"):
            fock_preparation_set(HilbertDims(n_osc=6), 6)


class TestParityMap:
    def test_parity_conditions_the_transmon_flip(self) -> None:
        dims = HilbertDims(n_osc=6)
        transfers = parity_map_set(default_parity_probes(dims, 2), dims)

        np.testing.assert_allclose(transfers.targets[0], basis_state(dims, 0, 0))
        np.testing.assert_allclose(transfers.targets[1], basis_state(dims, 1, 1))

    def test_coherent_probe_splits_by_photon_parity(self) -> None:
        dims = HilbertDims(n_osc=20)
        levels = np.arange(dims.n_osc)
        amplitudes = np.array([0.8**n / math.sqrt(math.factorial(n)) for n in levels], dtype=complex)
        amplitudes /= np.linalg.norm(amplitudes)
        probe = np.kron(amplitudes, [1.0, 0.0])

        target = parity_map_set([probe], dims).targets[0].reshape(dims.n_osc, dims.n_trans)

        np.testing.assert_allclose(target[:, 0], np.where(levels % 2 == 0, amplitudes, 0.0), atol=1e-12)
        np.testing.assert_allclose(target[:, 1], np.where(levels % 2 == 1, amplitudes, 0.0), atol=1e-12)

    def test_parity_unitary_is_unitary_with_extra_transmon_levels(self) -> None:
        dims = HilbertDims(n_osc=5, n_trans=3)
        unitary = parity_map_unitary(dims)

        np.testing.assert_allclose(unitary.conj().T @ unitary, np.eye(dims.joint), atol=1e-12)

    def test_probe_count_is_validated(self) -> None:
        with pytest.raises(ValueError, match="n_max must lie in"):
            default_parity_probes(HilbertDims(n_osc=4), 5)


class TestKerrCorrection:
    def test_zero_delay_gives_identity_targets(self, basis: LogicalBasis) -> None:
        transfers = kerr_correction_target(basis, HamiltonianModel.measured(), 0.0)

        np.testing.assert_allclose(transfers.targets, transfers.initial)

    def test_fock_states_acquire_the_inverse_kerr_phase(self) -> None:
        dims = HilbertDims(n_osc=8)
        model = HamiltonianModel.measured()
        delay = 250.0

        correction = free_kerr_unitary(model, dims, -delay)

        n = 5
        index = dims.index(n, 0)
        assert correction[index, index] == pytest.approx(np.exp(1j * delay * 0.5 * model.kerr * n * (n - 1)))

    def test_full_revival_period_is_the_identity(self, basis: LogicalBasis) -> None:
        model = HamiltonianModel.measured()

        transfers = kerr_correction_target(basis, model, 2 * math.pi / abs(model.kerr))

        np.testing.assert_allclose(transfers.targets, transfers.initial, atol=1e-9)

    def test_negative_delay_raises(self, basis: LogicalBasis) -> None:
        with pytest.raises(ValueError, match="delta_t must not be negative"):
            kerr_correction_target(basis, HamiltonianModel.measured(), -1.0)
