"""
Raised when an experiment configuration cannot be parsed or validated.

The offending key and the line on which it appears are attached whenever they
can be located in the source text.
"""

from __future__ import annotations

from cat_grape.errors.cat_grape_error import CatGrapeError


class ConfigParseError(CatGrapeError):
    """Represent an unknown, missing or out-of-range configuration entry."""

    def __init__(self, message: str, *, key: str | None = None, line_number: int | None = None) -> None:
        location = f" (line {line_number})" if line_number is not None else ""
        super().__init__(f"{message}{location}")
        self.key = key
        self.line_number = line_number
        self.reason = message


__all__ = ["ConfigParseError"]
