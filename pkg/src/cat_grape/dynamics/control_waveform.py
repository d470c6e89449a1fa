"""Piecewise-constant complex drive envelopes on a uniform time grid."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_DT_NS = 2.0


@dataclass(frozen=True, eq=False)
class ControlWaveform:
    """
    Drive amplitudes held constant over each of ``steps`` intervals of length ``dt``.

    ``samples`` has shape ``(steps, 4)`` with columns
    ``(Re eps_C, Im eps_C, Re eps_T, Im eps_T)`` in rad/ns. The array is copied
    and frozen on construction.
    """

    samples: np.ndarray
    dt: float = DEFAULT_DT_NS

    def __post_init__(self) -> None:
        """Validate the grid and freeze a private copy of the samples."""
        samples = np.array(self.samples, dtype=float)
        if samples.ndim != 2 or samples.shape[1] != 4:
            raise ValueError(f"samples must have shape (steps, 4), got {samples.shape}.")
        if samples.shape[0] < 1:
            raise ValueError("A waveform needs at least one step.")
        if not self.dt > 0:
            raise ValueError("dt must be greater than zero.")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @classmethod
    def zeros(cls, steps: int, dt: float = DEFAULT_DT_NS) -> ControlWaveform:
        """Return an all-zero waveform."""
        return cls(np.zeros((steps, 4)), dt=dt)

    @classmethod
    def from_complex(cls, oscillator: np.ndarray, transmon: np.ndarray, dt: float = DEFAULT_DT_NS) -> ControlWaveform:
        """Build a waveform from complex oscillator and transmon envelopes."""
        oscillator = np.asarray(oscillator, dtype=complex)
        transmon = np.asarray(transmon, dtype=complex)
        if oscillator.shape != transmon.shape or oscillator.ndim != 1:
            raise ValueError("Envelopes must be one-dimensional and of equal length.")
        return cls(np.column_stack([oscillator.real, oscillator.imag, transmon.real, transmon.imag]), dt=dt)

    @property
    def steps(self) -> int:
        return self.samples.shape[0]

    @property
    def duration(self) -> float:
        """Total pulse length in ns."""
        return self.steps * self.dt

    @property
    def times(self) -> np.ndarray:
        """Start time of every step in ns."""
        return np.arange(self.steps) * self.dt

    @property
    def oscillator(self) -> np.ndarray:
        return self.samples[:, 0] + 1j * self.samples[:, 1]

    @property
    def transmon(self) -> np.ndarray:
        return self.samples[:, 2] + 1j * self.samples[:, 3]

    def with_samples(self, samples: np.ndarray) -> ControlWaveform:
        """Return a waveform on the same grid with new samples."""
        return ControlWaveform(samples, dt=self.dt)

    def equals(self, other: ControlWaveform, *, atol: float = 0.0) -> bool:
        """Compare grids and samples, exactly by default."""
        return (
            self.dt == other.dt
            and self.samples.shape == other.samples.shape
            and bool(np.allclose(self.samples, other.samples, rtol=0.0, atol=atol))
        )
