"""
Random benchmarking sequences and their correction gates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from cat_grape.benchmarking.clifford_group import CliffordGroup
from cat_grape.catcode import RB_GATES, Gate


@lru_cache(maxsize=1)
def default_group() -> CliffordGroup:
    """The group generated by the eight benchmarking gates."""
    return CliffordGroup(RB_GATES)


def rng_stream(seed: int, worker: int) -> np.random.Generator:
    """
    Return the generator of one independent substream.

    The substream is keyed by ``(seed, worker)`` through ``SeedSequence`` spawn
    keys, so results do not depend on how work is split between workers.
    """
    if worker < 0:
        raise ValueError("worker index must not be negative.")
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(worker,)))


@dataclass(frozen=True, slots=True)
class RBSequence:
    """
    Random gates, optionally interleaved, followed by the gates that undo them.

    Attributes:
        gates: The random gates in application order.
        correction: Shortest word returning the ideal state to its start.
        interleave: Gate inserted after every random gate, if any.
    """

    gates: tuple[Gate, ...]
    correction: tuple[Gate, ...]
    interleave: Gate | None = None

    @property
    def length(self) -> int:
        return len(self.gates)

    def slots(self) -> tuple[tuple[Gate, bool], ...]:
        """Every gate in application order, flagged ``True`` where it fills an interleaved slot."""
        body: list[tuple[Gate, bool]] = []
        for gate in self.gates:
            body.append((gate, False))
            if self.interleave is not None:
                body.append((self.interleave, True))
        return (*body, *((gate, False) for gate in self.correction))

    def applied(self) -> tuple[Gate, ...]:
        """Every gate in application order, correction included."""
        return tuple(gate for gate, _ in self.slots())

    def ideal_unitary(self) -> np.ndarray:
        """Product of the ideal unitaries, which is the identity up to a global phase."""
        unitary = np.eye(2, dtype=complex)
        for gate in self.applied():
            unitary = gate.unitary() @ unitary
        return unitary


def sample_sequence(
    length: int,
    rng: np.random.Generator,
    *,
    interleave: Gate | str | None = None,
    group: CliffordGroup | None = None,
) -> RBSequence:
    """
    Draw ``length`` gates uniformly from the group generators and append their correction.

    Raises:
        ValueError: if ``length < 1`` or the interleaved gate is not a Clifford.
    """
    if length < 1:
        raise ValueError(f"Sequence length must be at least 1, got {length}.")
    group = group or default_group()
    interleaved = Gate.from_string(interleave) if interleave is not None else None
    choices = rng.integers(len(group.generators), size=length)
    gates = tuple(group.generators[int(choice)] for choice in choices)
    uncorrected = RBSequence(gates=gates, correction=(), interleave=interleaved)
    return RBSequence(gates=gates, correction=group.inverse_word(uncorrected.applied()), interleave=interleaved)


def correction_for(gates: list[Gate] | tuple[Gate, ...], *, group: CliffordGroup | None = None) -> tuple[Gate, ...]:
    """Return the correction word for an explicit gate list."""
    return (group or default_group()).inverse_word(gates)
