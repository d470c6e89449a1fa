import re

import numpy as np
import pytest

from cat_grape.benchmarking import CLIFFORD_ORDER, CliffordGroup, clifford_rotation, default_group, rotation_of
from cat_grape.catcode import RB_GATES, Gate, equal_up_to_global_phase


@pytest.fixture(scope="module")
def group() -> CliffordGroup:
    return CliffordGroup(RB_GATES)


def test_benchmarking_gates_generate_the_single_qubit_clifford_group(group: CliffordGroup) -> None:
    assert group.order == CLIFFORD_ORDER
    assert len(group.elements()) == CLIFFORD_ORDER
    assert group.max_word_length <= 3


def test_every_element_is_a_signed_permutation(group: CliffordGroup) -> None:
    for rotation in group.elements():
        np.testing.assert_array_equal(np.abs(rotation).sum(axis=0), [1, 1, 1])
        assert np.linalg.det(rotation) == pytest.approx(1.0)


@pytest.mark.parametrize(
    ("gates", "expected"),
    [
        ((Gate.X180,), (Gate.X180,)),
        ((Gate.X90, Gate.X90), (Gate.X180,)),
        ((Gate.Y90, Gate.MY90), (Gate.I,)),
        ((Gate.H, Gate.H), (Gate.I,)),
    ],
)
def test_decomposition_returns_the_shortest_word(
    group: CliffordGroup, gates: tuple[Gate, ...], expected: tuple[Gate, ...]
) -> None:
    assert group.decompose(group.rotation(gates)) == expected


def test_inverse_word_undoes_the_sequence(group: CliffordGroup) -> None:
    gates = (Gate.X90, Gate.H, Gate.MY90, Gate.Y180)

    correction = group.inverse_word(gates)

    unitary = np.eye(2, dtype=complex)
    for gate in (*gates, *correction):
        unitary = gate.unitary() @ unitary
    assert equal_up_to_global_phase(unitary, np.eye(2), atol=1e-9)


def test_words_reproduce_their_rotation(group: CliffordGroup) -> None:
    for rotation in group.elements():
        np.testing.assert_array_equal(group.rotation(group.decompose(rotation)), rotation)


def test_first_gate_acts_first(group: CliffordGroup) -> None:
    expected = rotation_of(Gate.H.unitary() @ Gate.X90.unitary())

    np.testing.assert_allclose(group.rotation((Gate.X90, Gate.H)), expected, atol=1e-12)


def test_t_gate_is_not_a_clifford() -> None:
    with pytest.raises(ValueError, match=re.escape("Gate T is not a Clifford operation.")):
        clifford_rotation(Gate.T)


def test_rotation_outside_the_group_is_rejected() -> None:
    group = CliffordGroup((Gate.X180,))

    assert group.order == 2
    with pytest.raises(ValueError, match="not an element of the generated group"):
        group.decompose(clifford_rotation(Gate.Y90))


def test_default_group_is_shared() -> None:
    assert default_group() is default_group()
