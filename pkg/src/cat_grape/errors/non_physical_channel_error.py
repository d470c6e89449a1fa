"""Raised when a channel output or transfer matrix violates physicality."""

from __future__ import annotations

from cat_grape.errors.cat_grape_error import CatGrapeError


class NonPhysicalChannelError(CatGrapeError):
    """Represent channel outputs that are not valid states or not trace preserving."""


__all__ = ["NonPhysicalChannelError"]
