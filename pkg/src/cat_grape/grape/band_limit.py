"""
Fourier-band reparametrisation of the drive envelopes.

Optimisation variables are the discrete Fourier coefficients of both complex
envelopes. Coefficients outside the allowed band are hard-zeroed before the
inverse transform, so every candidate waveform is band limited by construction.
The frequency grid is ``2 pi fftfreq(N, dt)`` in rad/ns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from cat_grape.dynamics import ControlWaveform

DEFAULT_BAND_EDGE = 2 * math.pi * 0.020


def frequency_grid(steps: int, dt: float) -> np.ndarray:
    """Angular frequency of every DFT bin in rad/ns."""
    return 2 * math.pi * np.fft.fftfreq(steps, d=dt)


@dataclass(frozen=True, slots=True)
class BandLimit:
    """Allowed angular-frequency window of each drive (rad/ns)."""

    oscillator_min: float = -DEFAULT_BAND_EDGE
    oscillator_max: float = DEFAULT_BAND_EDGE
    transmon_min: float = -DEFAULT_BAND_EDGE
    transmon_max: float = DEFAULT_BAND_EDGE

    def __post_init__(self) -> None:
        """Require each window to be non-degenerate."""
        if not self.oscillator_min < self.oscillator_max:
            raise ValueError("oscillator_min must be smaller than oscillator_max.")
        if not self.transmon_min < self.transmon_max:
            raise ValueError("transmon_min must be smaller than transmon_max.")

    @classmethod
    def full(cls, dt: float) -> BandLimit:
        """Return the band that keeps every bin of a grid with step ``dt``."""
        nyquist = math.pi / dt
        return cls(-nyquist, nyquist, -nyquist, nyquist)

    def validate(self, dt: float) -> None:
        """
        Check the windows against the Nyquist range of a grid.

        Raises:
            ValueError: if any edge lies outside ``[-pi/dt, pi/dt]``.
        """
        nyquist = math.pi / dt * (1 + 1e-12)
        for low, high in ((self.oscillator_min, self.oscillator_max), (self.transmon_min, self.transmon_max)):
            if low < -nyquist or high > nyquist:
                raise ValueError(f"Band [{low}, {high}] exceeds the Nyquist range +-{math.pi / dt} rad/ns.")

    def masks(self, steps: int, dt: float) -> np.ndarray:
        """
        Return boolean in-band masks with shape ``(2, steps)`` for oscillator and transmon.

        Raises:
            ValueError: if either band contains no frequency bin.
        """
        omega = frequency_grid(steps, dt)
        masks = np.array(
            [
                (omega >= self.oscillator_min) & (omega <= self.oscillator_max),
                (omega >= self.transmon_min) & (omega <= self.transmon_max),
            ]
        )
        for label, mask in zip(("oscillator", "transmon"), masks, strict=True):
            if not mask.any():
                raise ValueError(f"The {label} band contains no frequency bins for {steps} steps of {dt} ns.")
        return masks


def band_project(coefficients: np.ndarray, band: BandLimit, dt: float) -> ControlWaveform:
    """
    Return the band-limited waveform for frequency-domain coefficients.

    Args:
        coefficients: Complex array of shape ``(2, N)`` holding the DFT of the
            oscillator and transmon envelopes.
        band: Allowed frequency windows.
        dt: Step length in ns.
    """
    coefficients = np.asarray(coefficients, dtype=complex)
    if coefficients.ndim != 2 or coefficients.shape[0] != 2:
        raise ValueError(f"coefficients must have shape (2, steps), got {coefficients.shape}.")
    masks = band.masks(coefficients.shape[1], dt)
    envelopes = np.fft.ifft(np.where(masks, coefficients, 0.0), axis=1)
    return ControlWaveform.from_complex(envelopes[0], envelopes[1], dt=dt)


def band_project_adjoint(gradient: np.ndarray, band: BandLimit, dt: float) -> np.ndarray:
    """
    Pull a time-domain sample gradient back onto the coefficients.

    ``gradient`` has the ``(N, 4)`` layout of waveform samples. The result is
    complex with shape ``(2, N)`` and holds ``dJ/dRe c + i dJ/dIm c``.
    """
    steps = gradient.shape[0]
    complex_gradient = np.array([gradient[:, 0] + 1j * gradient[:, 1], gradient[:, 2] + 1j * gradient[:, 3]])
    return np.where(band.masks(steps, dt), np.fft.fft(complex_gradient, axis=1) / steps, 0.0)


def waveform_to_coefficients(waveform: ControlWaveform) -> np.ndarray:
    """Forward DFT of both envelopes, shape ``(2, N)``."""
    return np.fft.fft(np.array([waveform.oscillator, waveform.transmon]), axis=1)


def coefficients_to_parameters(coefficients: np.ndarray) -> np.ndarray:
    """Flatten complex coefficients into the real optimisation vector."""
    return np.concatenate([coefficients[0].real, coefficients[0].imag, coefficients[1].real, coefficients[1].imag])


def waveform_to_parameters(waveform: ControlWaveform) -> np.ndarray:
    """Real optimisation vector of a time-domain waveform."""
    return coefficients_to_parameters(waveform_to_coefficients(waveform))


def parameters_to_coefficients(parameters: np.ndarray) -> np.ndarray:
    """Inverse of :func:`coefficients_to_parameters`."""
    re_c, im_c, re_t, im_t = np.split(np.asarray(parameters, dtype=float), 4)
    return np.array([re_c + 1j * im_c, re_t + 1j * im_t])
