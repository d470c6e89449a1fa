"""
Raised when a Fock-space truncation cannot hold the requested state.

The error reports the population that would fall beyond the cutoff so callers
can choose a larger oscillator dimension.
"""

from __future__ import annotations

from cat_grape.errors.cat_grape_error import CatGrapeError


class TruncationError(CatGrapeError):
    """Represent a state whose photon-number tail exceeds the truncation tolerance."""

    def __init__(self, message: str, *, tail_mass: float | None = None) -> None:
        super().__init__(message)
        self.tail_mass = tail_mass


__all__ = ["TruncationError"]
