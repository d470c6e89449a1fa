import numpy as np
import pytest

from cat_grape.dynamics import ControlWaveform
from cat_grape.experiment import COLUMNS, WaveformFile, parse_waveform, read_waveform, write_waveform
from cat_grape.operators import HamiltonianModel


@pytest.fixture
def waveform_file() -> WaveformFile:
    samples = np.random.default_rng(2).normal(scale=0.01, size=(12, 4))
    return WaveformFile.for_model(ControlWaveform(samples, dt=2.0), HamiltonianModel.measured())


def test_header_describes_the_waveform(waveform_file: WaveformFile) -> None:
    header = waveform_file.header()

    assert header["steps"] == "12"
    assert header["dt_ns"] == "2.0"
    assert header["columns"] == " ".join(COLUMNS)
    assert header["transmon_carrier_mhz"] == "5664.0"
    assert header["model_hash"] == HamiltonianModel.measured().fingerprint()


def test_rows_list_the_transmon_drive_first(waveform_file: WaveformFile) -> None:
    first_row = [line for line in waveform_file.to_text().splitlines() if not line.startswith("#")][0]
    time, re_t, im_t, re_c, im_c = (float(value) for value in first_row.split())
    samples = waveform_file.waveform.samples[0]

    assert time == 0.0
    np.testing.assert_allclose([re_c, im_c, re_t, im_t], samples, atol=1e-9)


def test_written_file_reads_and_writes_back_identically(tmp_path, waveform_file: WaveformFile) -> None:
    path = write_waveform(tmp_path / "waveform_X90.txt", waveform_file)
    text = path.read_text(encoding="utf-8")

    loaded = read_waveform(path)

    assert loaded.to_text() == text
    assert loaded.model_hash == waveform_file.model_hash
    assert loaded.waveform.dt == 2.0
    np.testing.assert_allclose(loaded.waveform.samples, waveform_file.waveform.samples, atol=5e-10)


def test_single_row_waveform() -> None:
    single = WaveformFile(ControlWaveform(np.full((1, 4), 0.25), dt=4.0))

    parsed = parse_waveform(single.to_text())

    assert parsed.waveform.steps == 1
    np.testing.assert_allclose(parsed.waveform.samples, 0.25)


class TestParseErrors:
    def test_missing_header_key(self, waveform_file: WaveformFile) -> None:
        text = "\n".join(line for line in waveform_file.to_text().splitlines() if not line.startswith("# steps"))

        with pytest.raises(ValueError, match="Waveform header is missing 'steps'"):
            parse_waveform(text)

    def test_row_count_must_match_the_header(self, waveform_file: WaveformFile) -> None:
        text = waveform_file.to_text().replace("# steps: 12", "# steps: 13")

        with pytest.raises(ValueError, match=r"Expected 13 rows of 5 columns, found shape \(12, 5\)"):
            parse_waveform(text)

    def test_unknown_version(self, waveform_file: WaveformFile) -> None:
        text = waveform_file.to_text().replace("# version: 1", "# version: 7")

        with pytest.raises(ValueError, match="Unsupported waveform file version 7"):
            parse_waveform(text)

    def test_unexpected_columns(self, waveform_file: WaveformFile) -> None:
        text = waveform_file.to_text().replace("re_eps_t im_eps_t re_eps_c im_eps_c", "a b c d")

        with pytest.raises(ValueError, match="Unexpected waveform columns"):
            parse_waveform(text)
