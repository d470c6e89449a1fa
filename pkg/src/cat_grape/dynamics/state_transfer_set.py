"""Pairs of initial and target states that define an operation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from cat_grape.errors import DimensionMismatchError
from cat_grape.operators import HilbertDims, embed_state

NORMALISATION_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class StateTransferSet:
    """
    ``M`` state transfers sharing one truncation.

    Rows of ``initial`` and ``targets`` are normalised joint-space vectors; the
    ``m``-th initial state should be carried to the ``m``-th target.
    """

    dims: HilbertDims
    initial: np.ndarray
    targets: np.ndarray

    def __post_init__(self) -> None:
        """Check shapes and normalisation and freeze private copies."""
        initial = np.atleast_2d(np.array(self.initial, dtype=complex))
        targets = np.atleast_2d(np.array(self.targets, dtype=complex))
        if initial.shape != targets.shape:
            raise DimensionMismatchError(
                f"Initial states {initial.shape} and targets {targets.shape} must have the same shape."
            )
        if initial.shape[0] < 1:
            raise ValueError("A transfer set needs at least one pair.")
        if initial.shape[1] != self.dims.joint:
            raise DimensionMismatchError(f"States of length {initial.shape[1]} do not match {self.dims}.")
        for label, states in (("initial", initial), ("target", targets)):
            norms = np.linalg.norm(states, axis=1)
            if np.any(np.abs(norms - 1.0) > NORMALISATION_TOLERANCE):
                raise ValueError(f"Every {label} state must be normalised; norms were {norms.tolist()}.")
        initial.setflags(write=False)
        targets.setflags(write=False)
        object.__setattr__(self, "initial", initial)
        object.__setattr__(self, "targets", targets)

    @classmethod
    def from_pairs(cls, dims: HilbertDims, pairs: list[tuple[np.ndarray, np.ndarray]]) -> StateTransferSet:
        """Build a set from ``(initial, target)`` tuples."""
        if not pairs:
            raise ValueError("A transfer set needs at least one pair.")
        return cls(dims, np.array([p[0] for p in pairs]), np.array([p[1] for p in pairs]))

    @property
    def size(self) -> int:
        return self.initial.shape[0]

    def pairs(self) -> list[tuple[np.ndarray, np.ndarray]]:
        return list(zip(self.initial, self.targets, strict=True))

    def reversed(self) -> StateTransferSet:
        """Swap initial states and targets."""
        return StateTransferSet(self.dims, self.targets, self.initial)

    def embedded(self, dims: HilbertDims) -> StateTransferSet:
        """Zero-pad every state into a larger truncation."""
        if dims == self.dims:
            return self
        return StateTransferSet(
            dims,
            np.array([embed_state(state, self.dims, dims) for state in self.initial]),
            np.array([embed_state(state, self.dims, dims) for state in self.targets]),
        )
