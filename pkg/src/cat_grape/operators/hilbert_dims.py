"""Truncated oscillator and transmon dimensions of the joint Hilbert space."""

from __future__ import annotations

from dataclasses import dataclass

from cat_grape.errors import InvalidDimensionError


@dataclass(frozen=True, slots=True)
class HilbertDims:
    """
    Truncation of the oscillator-transmon system.

    Joint basis vectors are ordered oscillator-major: the Fock level ``n`` and
    transmon level ``m`` live at index ``n * n_trans + m``.
    """

    n_osc: int
    n_trans: int = 2

    def __post_init__(self) -> None:
        """Reject truncations that cannot hold a ladder operator."""
        if self.n_osc < 2:
            raise InvalidDimensionError(f"n_osc must be at least 2, got {self.n_osc}.")
        if self.n_trans < 2:
            raise InvalidDimensionError(f"n_trans must be at least 2, got {self.n_trans}.")

    @property
    def joint(self) -> int:
        """Dimension of the joint space."""
        return self.n_osc * self.n_trans

    def index(self, n_osc: int, n_trans: int) -> int:
        """Return the joint index of oscillator level ``n_osc`` and transmon level ``n_trans``."""
        if not 0 <= n_osc < self.n_osc or not 0 <= n_trans < self.n_trans:
            raise InvalidDimensionError(f"Level ({n_osc}, {n_trans}) lies outside the truncation {self}.")
        return n_osc * self.n_trans + n_trans

    def padded(self, extra_levels: int) -> HilbertDims:
        """Return the same truncation with ``extra_levels`` more oscillator levels."""
        if extra_levels < 0:
            raise ValueError("extra_levels must not be negative.")
        return HilbertDims(n_osc=self.n_osc + extra_levels, n_trans=self.n_trans)
