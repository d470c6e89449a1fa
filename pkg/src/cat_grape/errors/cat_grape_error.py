"""
Base exception for cat-grape failures.

Errors raised by the numerical modules derive from this type so callers can
catch every library failure in one place, for example at the command line.
"""

from __future__ import annotations


class CatGrapeError(RuntimeError):
    """
    Provide a consistent error for failures inside the cat-grape library.

    Plain invariant violations on value objects still raise ``ValueError``;
    this hierarchy covers failures that carry domain meaning.
    """


__all__ = ["CatGrapeError"]
