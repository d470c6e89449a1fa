"""Tests for truncated ladder operators and embeddings."""

import numpy as np
import pytest

from cat_grape.errors import DimensionMismatchError, InvalidDimensionError
from cat_grape.operators import (
    HilbertDims,
    annihilation,
    basis_state,
    embed_operator,
    embed_state,
    number_operators,
    oscillator_annihilation,
    transmon_annihilation,
)


def test_annihilation_lowers_fock_states() -> None:
    a = annihilation(5)
    fock = np.zeros(5)
    fock[3] = 1.0

    np.testing.assert_allclose(a @ fock, np.sqrt(3) * np.eye(5)[2])


def test_annihilation_needs_two_levels() -> None:
    with pytest.raises(InvalidDimensionError):
        annihilation(1)


def test_commutator_is_identity_below_the_truncation_edge() -> None:
    a = annihilation(6)
    commutator = a @ a.conj().T - a.conj().T @ a

    np.testing.assert_allclose(np.diag(commutator)[:-1], np.ones(5))
    assert commutator[-1, -1] == pytest.approx(-5.0)


def test_joint_operators_commute(small_dims: HilbertDims) -> None:
    a = oscillator_annihilation(small_dims)
    b = transmon_annihilation(small_dims)

    np.testing.assert_allclose(a @ b, b @ a)


def test_number_operators_match_joint_index(small_dims: HilbertDims) -> None:
    n_osc, n_trans = number_operators(small_dims)
    state = basis_state(small_dims, 3, 1)

    assert np.vdot(state, n_osc @ state).real == pytest.approx(3.0)
    assert np.vdot(state, n_trans @ state).real == pytest.approx(1.0)


def test_embedded_state_keeps_amplitudes() -> None:
    source = HilbertDims(n_osc=3)
    target = HilbertDims(n_osc=5, n_trans=3)

    embedded = embed_state(basis_state(source, 2, 1), source, target)

    np.testing.assert_allclose(embedded, basis_state(target, 2, 1))


def test_embedded_operator_acts_on_the_first_levels() -> None:
    source = HilbertDims(n_osc=3)
    target = HilbertDims(n_osc=5)
    operator = oscillator_annihilation(source)

    embedded = embed_operator(operator, source, target)

    np.testing.assert_allclose(
        embedded @ basis_state(target, 2, 0),
        np.sqrt(2) * basis_state(target, 1, 0),
    )
    np.testing.assert_allclose(embedded @ basis_state(target, 4, 0), np.zeros(target.joint))


def test_embedding_into_a_smaller_truncation_raises() -> None:
    with pytest.raises(DimensionMismatchError, match="smaller truncation"):
        embed_state(np.zeros(10), HilbertDims(n_osc=5), HilbertDims(n_osc=4))
