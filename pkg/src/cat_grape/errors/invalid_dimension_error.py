"""Raised when a truncation or matrix dimension is too small to be meaningful."""

from __future__ import annotations

from cat_grape.errors.cat_grape_error import CatGrapeError


class InvalidDimensionError(CatGrapeError):
    """Represent a Hilbert-space dimension below the supported minimum."""


__all__ = ["InvalidDimensionError"]
