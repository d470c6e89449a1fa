"""Configuration text shared by the experiment tests."""

from collections.abc import Callable
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


@pytest.fixture
def config_text() -> Callable[..., str]:
    """
    Build a small configuration: a Fock target on a three-level oscillator.

    Keyword arguments replace whole sections by name; ``extra`` is appended verbatim.
    """

    def _make(
        *,
        target: str = 'kind = "fock"\nfock = 0',
        pulse: str = "dt_ns = 2.0\nsteps = 20",
        truncation: str = "oscillator_levels = 3\ntransmon_levels = 2\npads = [0]",
        optimizer: str = "max_iterations = 50",
        simulation: str = "lindblad = false\nwigner_points = 5\nwigner_extent = 1.5",
        output_directory: str = "out",
        extra: str = "",
    ) -> str:
        return (
            f'seed = 3\noutput_directory = "{output_directory}"\n\n'
            f"{MEASURED_MODEL}\n"
            f"[target]\n{target}\n\n"
            f"[pulse]\n{pulse}\n\n"
            f"[truncation]\n{truncation}\n\n"
            f"[optimizer]\n{optimizer}\n\n"
            f"[simulation]\n{simulation}\n"
            f"{extra}"
        )

    return _make


@pytest.fixture
def write_config(tmp_path: Path, config_text: Callable[..., str]) -> Callable[..., Path]:
    """Write a configuration whose output directory lies under ``tmp_path``."""

    def _write(name: str = "config.toml", **sections: str) -> Path:
        sections.setdefault("output_directory", str(tmp_path / "out"))
        path = tmp_path / name
        path.write_text(config_text(**sections), encoding="utf-8")
        return path

    return _write
