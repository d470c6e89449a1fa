"""
Plain-text waveform files.

A file starts with ``# key: value`` header lines followed by one row per time
step: ``t_ns re_eps_t im_eps_t re_eps_c im_eps_c`` in rad/ns, written in
fixed point with nine decimals. Reading a written file and writing it again
reproduces it byte for byte.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from cat_grape.dynamics import ControlWaveform
from cat_grape.experiment.atomic_write import atomic_write_text
from cat_grape.operators import HamiltonianModel, angular_to_megahertz

FORMAT_VERSION = 1
COLUMNS = ("t_ns", "re_eps_t", "im_eps_t", "re_eps_c", "im_eps_c")
SAMPLE_FORMAT = "%.9f"
# Files list the transmon drive first; samples hold (Re eC, Im eC, Re eT, Im eT). The swap is its own inverse.
_SWAP_DRIVES = [2, 3, 0, 1]


@dataclass(frozen=True, eq=False)
class WaveformFile:
    """
    A waveform with the metadata stored in its header.

    Carrier frequencies are in MHz and are informational only.
    """

    waveform: ControlWaveform
    transmon_carrier_mhz: float = 0.0
    oscillator_carrier_mhz: float = 0.0
    model_hash: str = ""
    version: int = FORMAT_VERSION

    @classmethod
    def for_model(cls, waveform: ControlWaveform, model: HamiltonianModel) -> WaveformFile:
        return cls(
            waveform=waveform,
            transmon_carrier_mhz=angular_to_megahertz(model.omega_t),
            oscillator_carrier_mhz=angular_to_megahertz(model.omega_c),
            model_hash=model.fingerprint(),
        )

    def header(self) -> dict[str, str]:
        return {
            "version": str(self.version),
            "dt_ns": repr(float(self.waveform.dt)),
            "steps": str(self.waveform.steps),
            "transmon_carrier_mhz": repr(round(float(self.transmon_carrier_mhz), 9)),
            "oscillator_carrier_mhz": repr(round(float(self.oscillator_carrier_mhz), 9)),
            "model_hash": self.model_hash,
            "columns": " ".join(COLUMNS),
        }

    def to_text(self) -> str:
        table = np.column_stack([self.waveform.times, self.waveform.samples[:, _SWAP_DRIVES]])
        buffer = io.StringIO()
        header = "\n".join(f"{key}: {value}" for key, value in self.header().items())
        np.savetxt(buffer, table, fmt=SAMPLE_FORMAT, delimiter=" ", header=header, comments="# ")
        return buffer.getvalue()


def _parse_header(lines: list[str]) -> dict[str, str]:
    header: dict[str, str] = {}
    for number, line in enumerate(lines, start=1):
        if not line.startswith("#"):
            break
        key, separator, value = line[1:].partition(":")
        if not separator:
            raise ValueError(f"Malformed waveform header on line {number}: {line!r}")
        header[key.strip()] = value.strip()
    return header


def parse_waveform(text: str) -> WaveformFile:
    """
    Parse waveform file contents.

    Raises:
        ValueError: on a missing or inconsistent header, or rows of the wrong width.
    """
    header = _parse_header(text.splitlines())
    for key in ("version", "dt_ns", "steps", "columns"):
        if key not in header:
            raise ValueError(f"Waveform header is missing {key!r}.")
    if int(header["version"]) != FORMAT_VERSION:
        raise ValueError(f"Unsupported waveform file version {header['version']}.")
    if tuple(header["columns"].split()) != COLUMNS:
        raise ValueError(f"Unexpected waveform columns: {header['columns']!r}.")
    table = np.loadtxt(io.StringIO(text), comments="#", ndmin=2)
    steps = int(header["steps"])
    if table.shape != (steps, len(COLUMNS)):
        raise ValueError(f"Expected {steps} rows of {len(COLUMNS)} columns, found shape {table.shape}.")
    waveform = ControlWaveform(table[:, 1:][:, _SWAP_DRIVES], dt=float(header["dt_ns"]))
    return WaveformFile(
        waveform=waveform,
        transmon_carrier_mhz=float(header.get("transmon_carrier_mhz", 0.0)),
        oscillator_carrier_mhz=float(header.get("oscillator_carrier_mhz", 0.0)),
        model_hash=header.get("model_hash", ""),
        version=FORMAT_VERSION,
    )


def write_waveform(path: str | os.PathLike[str], waveform_file: WaveformFile) -> Path:
    """Atomically write a waveform file."""
    return atomic_write_text(path, waveform_file.to_text())


def read_waveform(path: str | os.PathLike[str]) -> WaveformFile:
    """Read a waveform file written by :func:`write_waveform`."""
    return parse_waveform(Path(path).read_text(encoding="utf-8"))
