"""
Penalty terms subtracted from the multi-truncation fidelity.

Every function returns the penalty value together with its exact gradient so
the optimizer can chain them into the full cost derivative.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from cat_grape.dynamics import ControlWaveform

logger = logging.getLogger(__name__)

DEFAULT_EPSILON_MAX = 2 * math.pi * 0.01


@dataclass(frozen=True, slots=True)
class PenaltyWeights:
    """
    Lagrange weights and the amplitude cap.

    ``epsilon_max`` is either one cap for both drives or an
    ``(oscillator, transmon)`` pair, in rad/ns.
    """

    lambda_amplitude: float = 1e4
    lambda_derivative: float = 1e-3
    lambda_discrepancy: float = 1.0
    epsilon_max: float | tuple[float, float] = DEFAULT_EPSILON_MAX

    def __post_init__(self) -> None:
        """Require nonnegative weights and a positive cap."""
        for name in ("lambda_amplitude", "lambda_derivative", "lambda_discrepancy"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must not be negative.")
        if any(cap <= 0 for cap in self.caps):
            raise ValueError("epsilon_max must be greater than zero.")

    @property
    def caps(self) -> tuple[float, float]:
        """Amplitude caps as ``(oscillator, transmon)``."""
        if isinstance(self.epsilon_max, tuple):
            return float(self.epsilon_max[0]), float(self.epsilon_max[1])
        return float(self.epsilon_max), float(self.epsilon_max)


def amplitude_penalty(
    waveform: ControlWaveform,
    epsilon_max: float | tuple[float, float],
) -> tuple[float, np.ndarray]:
    """
    Return ``sum_n (|eps_n| - eps_max)^2`` over samples above the cap, for both drives.

    Raises:
        ValueError: if a cap is not positive.
    """
    caps = epsilon_max if isinstance(epsilon_max, tuple) else (epsilon_max, epsilon_max)
    if any(cap <= 0 for cap in caps):
        raise ValueError("epsilon_max must be greater than zero.")
    value = 0.0
    gradient = np.zeros_like(waveform.samples)
    for drive, cap in enumerate(caps):
        re = waveform.samples[:, 2 * drive]
        im = waveform.samples[:, 2 * drive + 1]
        modulus = np.hypot(re, im)
        excess = np.where(modulus > cap, modulus - cap, 0.0)
        value += float(np.sum(excess**2))
        scale = np.divide(2.0 * excess, modulus, out=np.zeros_like(modulus), where=modulus > cap)
        gradient[:, 2 * drive] = scale * re
        gradient[:, 2 * drive + 1] = scale * im
    return value, gradient


def derivative_penalty(waveform: ControlWaveform) -> tuple[float, np.ndarray]:
    """Return ``sum_n |eps_{n+1} - eps_n|^2`` over both quadratures of both drives."""
    differences = np.diff(waveform.samples, axis=0)
    gradient = np.zeros_like(waveform.samples)
    gradient[1:] += 2.0 * differences
    gradient[:-1] -= 2.0 * differences
    return float(np.sum(differences**2)), gradient


def discrepancy_penalty(fidelities: list[float] | np.ndarray) -> tuple[float, np.ndarray]:
    """
    Return the sum of squared differences over unordered truncation pairs.

    Fewer than two fidelities leave nothing to compare; the penalty is then zero
    and a warning is logged.
    """
    values = np.asarray(fidelities, dtype=float)
    if values.size < 2:
        logger.warning("Discrepancy penalty needs at least two truncations; got %d.", values.size)
        return 0.0, np.zeros_like(values)
    differences = values[:, None] - values[None, :]
    value = 0.5 * float(np.sum(differences**2))
    return value, 2.0 * np.sum(differences, axis=1)
