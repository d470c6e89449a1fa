"""
Exponential decay fits and benchmarking error rates.

Success probabilities are modelled as ``p(n) = 1/2 + A exp(-n / tau)``. The fit
is initialised from a straight line through ``log(p - 1/2)`` and refined by
Levenberg-Marquardt least squares over ``(A, 1/tau)``.
"""

from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass

import numpy as np
import scipy.optimize

logger = logging.getLogger(__name__)

ASYMPTOTE = 0.5
MIN_DECAY_RATE = 1e-12


@dataclass(frozen=True, eq=False)
class FitResult:
    """
    Fitted decay with its uncertainty.

    ``tau`` is ``math.inf`` when the data show no decay; the covariance is then
    filled with NaN.
    """

    amplitude: float
    tau: float
    covariance: np.ndarray
    residuals: np.ndarray

    @property
    def decaying(self) -> bool:
        return math.isfinite(self.tau)

    @property
    def residual_rms(self) -> float:
        return float(np.sqrt(np.mean(self.residuals**2)))

    @property
    def tau_stderr(self) -> float:
        return float(np.sqrt(self.covariance[1, 1])) if self.decaying else math.nan

    def predict(self, lengths: np.ndarray) -> np.ndarray:
        lengths = np.asarray(lengths, dtype=float)
        if not self.decaying:
            return np.full(lengths.shape, ASYMPTOTE + self.amplitude)
        return ASYMPTOTE + self.amplitude * np.exp(-lengths / self.tau)


def decay_model(lengths: np.ndarray, amplitude: float, rate: float) -> np.ndarray:
    return ASYMPTOTE + amplitude * np.exp(-rate * lengths)


def _non_decaying(probabilities: np.ndarray) -> FitResult:
    amplitude = float(np.mean(probabilities) - ASYMPTOTE)
    return FitResult(
        amplitude=amplitude,
        tau=math.inf,
        covariance=np.full((2, 2), math.nan),
        residuals=probabilities - (ASYMPTOTE + amplitude),
    )


def fit_decay(lengths: np.ndarray, probabilities: np.ndarray) -> FitResult:
    """
    Fit ``p(n) = 1/2 + A exp(-n / tau)``.

    Raises:
        ValueError: if fewer than three distinct lengths are supplied.
    """
    lengths = np.asarray(lengths, dtype=float)
    probabilities = np.asarray(probabilities, dtype=float)
    if lengths.shape != probabilities.shape:
        raise ValueError("lengths and probabilities must have the same shape.")
    if np.unique(lengths).size < 3:
        raise ValueError("A decay fit needs at least three distinct sequence lengths.")

    excess = probabilities - ASYMPTOTE
    positive = excess > 0
    if np.unique(lengths[positive]).size < 2:
        return _non_decaying(probabilities)
    slope, intercept = np.polyfit(lengths[positive], np.log(excess[positive]), 1)
    if -slope <= MIN_DECAY_RATE:
        logger.info("Benchmarking data show no decay; reporting an infinite decay constant.")
        return _non_decaying(probabilities)

    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", scipy.optimize.OptimizeWarning)
            (amplitude, rate), covariance = scipy.optimize.curve_fit(
                decay_model, lengths, probabilities, p0=(math.exp(intercept), -slope), method="lm"
            )
    except RuntimeError as error:
        logger.warning("Decay fit did not converge: %s", error)
        return _non_decaying(probabilities)
    if rate <= MIN_DECAY_RATE:
        return _non_decaying(probabilities)

    tau = 1.0 / rate
    # Propagate the (A, rate) covariance to (A, tau) with d tau / d rate = -tau^2.
    jacobian = np.diag([1.0, -(tau**2)])
    return FitResult(
        amplitude=float(amplitude),
        tau=float(tau),
        covariance=jacobian @ covariance @ jacobian.T,
        residuals=probabilities - decay_model(lengths, amplitude, rate),
    )


def rb_error(tau_rb: float) -> float:
    """Average error per gate, ``(1 - exp(-1 / tau)) / 2``."""
    if tau_rb <= 0:
        raise ValueError("tau must be positive.")
    if math.isinf(tau_rb):
        return 0.0
    return (1.0 - math.exp(-1.0 / tau_rb)) / 2.0


def irb_error(tau_gate: float, tau_rb: float) -> float:
    """
    Error of an interleaved gate, ``(1 - exp(1/tau_rb - 1/tau_gate)) / 2``.

    Positive when the interleaved decay is faster than the reference decay. A
    negative value is statistically possible and is returned with a warning.
    """
    if tau_gate <= 0 or tau_rb <= 0:
        raise ValueError("tau must be positive.")
    error = (1.0 - math.exp(1.0 / tau_rb - 1.0 / tau_gate)) / 2.0
    if error < 0:
        logger.warning("Interleaved decay is slower than the reference decay; gate error %.3e is negative.", error)
    return error
