"""Raised when a Wigner grid cannot determine the requested density matrix."""

from __future__ import annotations

from cat_grape.errors.cat_grape_error import CatGrapeError


class ReconstructionError(CatGrapeError):
    """Represent an underdetermined reconstruction, naming the points it needs."""

    def __init__(self, message: str, *, required_points: int) -> None:
        super().__init__(message)
        self.required_points = required_points


__all__ = ["ReconstructionError"]
