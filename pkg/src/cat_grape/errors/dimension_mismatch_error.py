"""Raised when operators, states or waveforms disagree on their dimensions."""

from __future__ import annotations

from cat_grape.errors.cat_grape_error import CatGrapeError


class DimensionMismatchError(CatGrapeError):
    """Represent inconsistent shapes between cooperating inputs."""


__all__ = ["DimensionMismatchError"]
