"""
The single-qubit Clifford group generated by the benchmarking gate set.

Elements are identified by the integer ``3 x 3`` rotation they induce on the
Bloch sphere, which discards the global phase. A breadth-first search over
words in the generators gives every element its shortest decomposition, with
ties broken by lexicographic order of the gate labels.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import cache

import numpy as np

from cat_grape.catcode import RB_GATES, Gate
from cat_grape.tomography import ptm_from_unitary

CLIFFORD_ORDER = 24
RotationKey = tuple[int, ...]


def rotation_of(unitary: np.ndarray) -> np.ndarray:
    """Return the Bloch-sphere rotation of a 2x2 unitary."""
    return ptm_from_unitary(unitary).matrix[1:, 1:]


def rotation_key(rotation: np.ndarray) -> RotationKey:
    """Canonical hashable key of a Clifford rotation, whose entries are 0 or +-1."""
    return tuple(int(value) for value in np.rint(rotation).reshape(-1))


@cache
def clifford_rotation(gate: Gate) -> np.ndarray:
    """
    Return the integer rotation of a Clifford gate.

    Raises:
        ValueError: if the gate is not a Clifford.
    """
    rotation = rotation_of(gate.unitary())
    if not np.allclose(rotation, np.rint(rotation), atol=1e-9):
        raise ValueError(f"Gate {gate.label} is not a Clifford operation.")
    rotation = np.rint(rotation)
    rotation.setflags(write=False)
    return rotation


def _word_order(word: Sequence[Gate]) -> tuple[str, ...]:
    return tuple(gate.label for gate in word)


class CliffordGroup:
    """Closure of a gate set under composition, with a decomposition table."""

    def __init__(self, generators: Iterable[Gate] = RB_GATES) -> None:
        self._generators = tuple(sorted(set(generators), key=lambda gate: gate.label))
        self._rotations = {gate: clifford_rotation(gate) for gate in self._generators}
        identity = rotation_key(np.eye(3))
        self._words: dict[RotationKey, tuple[Gate, ...]] = {identity: ()}
        self._elements: dict[RotationKey, np.ndarray] = {identity: np.eye(3)}

        frontier = [()]
        while frontier:
            candidates: dict[RotationKey, tuple[Gate, ...]] = {}
            for word in frontier:
                for gate in self._generators:
                    extended = (*word, gate)
                    key = rotation_key(self._compose(extended))
                    if key in self._words:
                        continue
                    if key not in candidates or _word_order(extended) < _word_order(candidates[key]):
                        candidates[key] = extended
            for key, word in candidates.items():
                self._words[key] = word
                self._elements[key] = self._compose(word)
            frontier = sorted(candidates.values(), key=_word_order)

        if Gate.I in self._generators:
            self._words[identity] = (Gate.I,)

    def _compose(self, word: Sequence[Gate]) -> np.ndarray:
        rotation = np.eye(3)
        for gate in word:
            rotation = self._rotations[gate] @ rotation
        return rotation

    @property
    def generators(self) -> tuple[Gate, ...]:
        return self._generators

    @property
    def order(self) -> int:
        return len(self._words)

    @property
    def max_word_length(self) -> int:
        return max(len(word) for word in self._words.values())

    def elements(self) -> list[np.ndarray]:
        """Every element's rotation, in no particular order."""
        return [rotation.copy() for rotation in self._elements.values()]

    def rotation(self, gates: Iterable[Gate]) -> np.ndarray:
        """Rotation of the gates applied in order, the first gate acting first."""
        rotation = np.eye(3)
        for gate in gates:
            rotation = clifford_rotation(gate) @ rotation
        return rotation

    def decompose(self, rotation: np.ndarray) -> tuple[Gate, ...]:
        """
        Return the shortest word implementing ``rotation``.

        Raises:
            ValueError: if the rotation is not in the group.
        """
        key = rotation_key(rotation)
        if key not in self._words:
            raise ValueError("Rotation is not an element of the generated group.")
        return self._words[key]

    def inverse_word(self, gates: Iterable[Gate]) -> tuple[Gate, ...]:
        """Return the shortest word undoing ``gates``."""
        return self.decompose(self.rotation(gates).T)
