import numpy as np
import pytest

from cat_grape.dynamics import ControlWaveform


class TestControlWaveform:
    def test_samples_are_copied_and_read_only(self) -> None:
        source = np.zeros((3, 4))
        waveform = ControlWaveform(source, dt=2.0)
        source[0, 0] = 1.0

        assert waveform.samples[0, 0] == 0.0
        with pytest.raises(ValueError, match="read-only"):
            waveform.samples[0, 0] = 1.0

    def test_duration_and_times(self) -> None:
        waveform = ControlWaveform.zeros(550, dt=2.0)

        assert waveform.duration == pytest.approx(1100.0)
        assert waveform.times[-1] == pytest.approx(1098.0)

    def test_complex_envelopes_follow_sample_columns(self) -> None:
        oscillator = np.array([1 + 2j, 3 - 1j])
        transmon = np.array([0.5j, -0.25])
        waveform = ControlWaveform.from_complex(oscillator, transmon, dt=1.0)

        np.testing.assert_allclose(waveform.samples[0], [1.0, 2.0, 0.0, 0.5])
        np.testing.assert_allclose(waveform.oscillator, oscillator)
        np.testing.assert_allclose(waveform.transmon, transmon)

    @pytest.mark.parametrize(
        ("samples", "dt", "message"),
        [
            (np.zeros((3, 3)), 2.0, "samples must have shape"),
            (np.zeros((0, 4)), 2.0, "at least one step"),
            (np.zeros((3, 4)), 0.0, "dt must be greater than zero"),
        ],
    )
    def test_rejects_invalid_grids(self, samples: np.ndarray, dt: float, message: str) -> None:
        with pytest.raises(ValueError, match=message):
            ControlWaveform(samples, dt=dt)

    def test_equals_compares_grid_and_samples(self) -> None:
        waveform = ControlWaveform(np.ones((2, 4)), dt=2.0)

        assert waveform.equals(ControlWaveform(np.ones((2, 4)), dt=2.0))
        assert not waveform.equals(ControlWaveform(np.ones((2, 4)), dt=1.0))
        assert waveform.equals(ControlWaveform(np.ones((2, 4)) + 1e-12, dt=2.0), atol=1e-9)
