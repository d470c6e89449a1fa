"""Configuration builders shared by the end-to-end tests."""

from pathlib import Path

import pytest

MEASURED_MODEL = """\
[model]
chi_mhz = -2.194
kerr_mhz = -0.0037
chi_prime_mhz = -0.019
anharmonicity_mhz = -236.0
t1_transmon_us = 170.0
tphi_transmon_us = 43.0
t1_oscillator_us = 2700.0
transmon_frequency_mhz = 5664.0
oscillator_frequency_mhz = 4452.6
"""

SMALL_FOCK_SECTIONS = """
[target]
kind = "fock"
fock = 0

[pulse]
dt_ns = 2.0
steps = 20

[truncation]
oscillator_levels = 3
pads = [0]

[simulation]
lindblad = false
"""


@pytest.fixture
def small_config(tmp_path: Path) -> Path:
    """A fast Fock-0 configuration writing into ``tmp_path / "out"``."""
    path = tmp_path / "small.toml"
    path.write_text(
        f'seed = 1\noutput_directory = "{tmp_path / "out"}"\n\n{MEASURED_MODEL}{SMALL_FOCK_SECTIONS}',
        encoding="utf-8",
    )
    return path


@pytest.fixture
def measured_config():
    """Return a factory writing a configuration with the measured model and the given sections."""

    def _write(path: Path, output_directory: Path, sections: str, seed: int = 0) -> Path:
        path.write_text(
            f'seed = {seed}\noutput_directory = "{output_directory}"\n\n{MEASURED_MODEL}\n{sections}', encoding="utf-8"
        )
        return path

    return _write
