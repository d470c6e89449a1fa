"""Tests for displaced-parity and series Wigner functions."""

import logging
import math

import numpy as np
import pytest

from cat_grape.catcode import LogicalBasis
from cat_grape.errors import DimensionMismatchError
from cat_grape.operators import HilbertDims
from cat_grape.tomography import (
    WIGNER_BOUND,
    WignerGrid,
    coherent_state,
    displacement,
    reduce_to_oscillator,
    square_lattice,
    wigner,
    wigner_series,
)

PROBE_POINTS = np.array([0.0, 0.3 + 0.1j, -0.5j, 1.0 - 0.4j, 0.9 + 0.9j])


def _fock(n: int, levels: int) -> np.ndarray:
    state = np.zeros(levels, dtype=complex)
    state[n] = 1.0
    return state


class TestDisplacement:
    def test_displaced_vacuum_has_poisson_mean(self) -> None:
        n_osc = 30
        displaced = displacement(np.exp(0.4j), n_osc) @ _fock(0, n_osc)

        assert np.sum(np.arange(n_osc) * np.abs(displaced) ** 2) == pytest.approx(1.0, abs=1e-6)
        np.testing.assert_allclose(displaced, coherent_state(np.exp(0.4j), n_osc), atol=1e-6)

    def test_opposite_displacements_cancel(self) -> None:
        beta = 1.2 - 0.7j

        np.testing.assert_allclose(displacement(beta, 25) @ displacement(-beta, 25), np.eye(25), atol=1e-9)


def test_vacuum_peaks_at_the_bound() -> None:
    grid = wigner(_fock(0, 4), np.array([0.0]))

    assert grid.values[0] == pytest.approx(WIGNER_BOUND)


def test_origin_value_is_scaled_parity() -> None:
    grid = wigner(_fock(1, 4), np.array([0.0]))

    assert grid.values[0] == pytest.approx(-WIGNER_BOUND)


def test_coherent_state_is_a_gaussian() -> None:
    beta0 = 0.8 - 0.3j

    grid = wigner(coherent_state(beta0, 30), PROBE_POINTS)

    expected = WIGNER_BOUND * np.exp(-2 * np.abs(PROBE_POINTS - beta0) ** 2)
    np.testing.assert_allclose(grid.values, expected, atol=1e-6)
    assert not grid.untrusted.any()


def test_series_agrees_with_displaced_parity_for_a_codeword() -> None:
    dims = HilbertDims(n_osc=24)
    codeword = LogicalBasis(dims).plus_z

    parity = wigner(codeword, PROBE_POINTS, dims=dims)
    series = wigner_series(codeword, PROBE_POINTS, dims=dims)

    np.testing.assert_allclose(series, parity.values, atol=1e-8)
    assert np.max(np.abs(parity.values)) <= WIGNER_BOUND + 1e-9


def test_integral_over_a_large_lattice_is_one() -> None:
    betas = square_lattice(4.0, 81)
    grid = WignerGrid(betas, wigner_series(coherent_state(0.5, 20), betas), np.zeros(betas.shape, dtype=bool))

    assert grid.integral() == pytest.approx(1.0, rel=0.02)


def test_points_beyond_the_working_truncation_are_flagged(caplog: pytest.LogCaptureFixture) -> None:
    with caplog.at_level(logging.WARNING, logger="cat_grape.tomography.wigner"):
        grid = wigner(_fock(0, 4), np.array([0.0, 3.0]), levels=8)

    assert grid.untrusted.tolist() == [False, True]
    assert grid.trusted_fraction == pytest.approx(0.5)
    assert "exceed the working truncation" in caplog.text


def test_working_truncation_smaller_than_state_is_rejected() -> None:
    with pytest.raises(ValueError, match="smaller than the state dimension"):
        wigner(_fock(0, 10), np.array([0.0]), levels=5)


def test_square_lattice_rows_run_along_the_imaginary_axis() -> None:
    betas = square_lattice(2.0, 5)

    assert betas.shape == (5, 5)
    assert betas[0, 0] == pytest.approx(-2.0 - 2.0j)
    assert betas[1, 0] == pytest.approx(-2.0 - 1.0j)
    assert betas[0, 1] == pytest.approx(-1.0 - 2.0j)


def test_reduce_to_oscillator_traces_out_the_transmon() -> None:
    dims = HilbertDims(n_osc=3, n_trans=2)
    state = np.zeros(dims.joint, dtype=complex)
    state[dims.index(1, 0)] = state[dims.index(2, 1)] = 1 / math.sqrt(2)

    reduced = reduce_to_oscillator(state, dims)

    np.testing.assert_allclose(reduced, np.diag([0.0, 0.5, 0.5]))


def test_reduce_to_oscillator_rejects_wrong_shapes() -> None:
    with pytest.raises(DimensionMismatchError):
        reduce_to_oscillator(np.zeros(5), HilbertDims(n_osc=3))
