import numpy as np
import pytest

from cat_grape.dynamics import ControlWaveform
from cat_grape.experiment import dispersion_correction, dispersion_filter
from cat_grape.grape import frequency_grid

STEPS = 64
DT = 2.0


def _tone(bin_index: int) -> ControlWaveform:
    phase = np.exp(2j * np.pi * bin_index * np.arange(STEPS) / STEPS)
    return ControlWaveform.from_complex(0.01 * phase, 0.02 * phase, dt=DT)


def test_zero_weighting_leaves_the_waveform_unchanged() -> None:
    waveform = _tone(3)

    assert dispersion_correction(waveform, 0.0, 5.0) is waveform


def test_filter_at_zero_frequency_is_one() -> None:
    response = dispersion_filter(STEPS, DT, weighting=0.3, delay=7.0)

    assert response[0] == pytest.approx(1.0)


@pytest.mark.parametrize("bin_index", [1, 5, -4])
def test_pure_tone_is_scaled_by_the_filter(bin_index: int) -> None:
    weighting, delay = 0.4, 3.0
    omega = frequency_grid(STEPS, DT)[bin_index % STEPS]
    factor = 1 + weighting * omega * np.exp(1j * omega * delay)
    waveform = _tone(bin_index)

    corrected = dispersion_correction(waveform, weighting, delay)

    np.testing.assert_allclose(corrected.oscillator, factor * waveform.oscillator, atol=1e-12)
    np.testing.assert_allclose(corrected.transmon, factor * waveform.transmon, atol=1e-12)


def test_undoing_the_correction_leaves_a_second_order_residual() -> None:
    rng = np.random.default_rng(4)
    waveform = ControlWaveform(rng.normal(scale=0.01, size=(STEPS, 4)), dt=DT)

    def residual(weighting: float) -> float:
        there = dispersion_correction(waveform, weighting, 2.0)
        back = dispersion_correction(there, -weighting, 2.0)
        return float(np.linalg.norm(back.samples - waveform.samples))

    assert residual(0.02) / residual(0.01) == pytest.approx(4.0, rel=1e-6)
    assert residual(0.01) < 1e-2 * np.linalg.norm(waveform.samples)
