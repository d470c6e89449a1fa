"""Raised when a control sample cannot be used to build a propagator."""

from __future__ import annotations

from cat_grape.errors.cat_grape_error import CatGrapeError


class InvalidControlError(CatGrapeError):
    """Represent non-finite or malformed drive amplitudes."""


__all__ = ["InvalidControlError"]
