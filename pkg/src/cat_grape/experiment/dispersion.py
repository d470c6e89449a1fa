"""
Frequency-domain pre-distortion for line dispersion and delay.

Each complex drive envelope is transformed as
``e(w) -> (1 + b w exp(i w tau)) e(w)`` on the DFT grid of the waveform and
transformed back. The correction is first order in ``b``: applying it with
``-b`` afterwards leaves a residual of order ``b^2``.
"""

from __future__ import annotations

import numpy as np

from cat_grape.dynamics import ControlWaveform
from cat_grape.grape import frequency_grid


def dispersion_filter(steps: int, dt: float, weighting: float, delay: float) -> np.ndarray:
    """Return ``1 + b w exp(i w tau)`` on the DFT grid."""
    omega = frequency_grid(steps, dt)
    return 1.0 + weighting * omega * np.exp(1j * omega * delay)


def dispersion_correction(waveform: ControlWaveform, weighting: float, delay: float) -> ControlWaveform:
    """
    Apply the linear weighting and delay correction to both drives.

    Args:
        waveform: Pulse to pre-distort.
        weighting: Coefficient ``b`` in ns.
        delay: Delay ``tau`` in ns.
    """
    if weighting == 0:
        return waveform
    response = dispersion_filter(waveform.steps, waveform.dt, weighting, delay)
    oscillator = np.fft.ifft(response * np.fft.fft(waveform.oscillator))
    transmon = np.fft.ifft(response * np.fft.fft(waveform.transmon))
    return ControlWaveform.from_complex(oscillator, transmon, dt=waveform.dt)
