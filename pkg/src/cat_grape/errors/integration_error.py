"""
Raised when the master-equation integrator cannot meet its accuracy target.

Diagnostics describe the control step that failed, the largest substep count
tried and the final error estimate.
"""

from __future__ import annotations

from cat_grape.errors.cat_grape_error import CatGrapeError


class IntegrationError(CatGrapeError):
    """Represent an integrator step rejected beyond the retry budget."""

    def __init__(self, message: str, *, step: int, substeps: int, error_estimate: float) -> None:
        super().__init__(f"{message} (step {step}, substeps {substeps}, error estimate {error_estimate:.3e})")
        self.step = step
        self.substeps = substeps
        self.error_estimate = error_estimate


__all__ = ["IntegrationError"]
