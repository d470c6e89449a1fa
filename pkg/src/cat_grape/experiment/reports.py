"""
Plain-text report and table formats.

Reports are ``key: value`` lines. Tables start with ``#`` comment lines naming
their columns. Literature values are labelled as such and are never used as
pass criteria.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping

import numpy as np

from cat_grape.benchmarking import FitResult, RBResult, rb_error
from cat_grape.catcode import Gate
from cat_grape.tomography import PAULI_LABELS, PauliTransferMatrix, WignerGrid

# Measured RB, process-tomography and simulated infidelities in percent; None where not reported.
LITERATURE_GATE_INFIDELITY_PERCENT: dict[Gate, tuple[float | None, float, float]] = {
    Gate.I: (0.46, 0.51, 0.31),
    Gate.X90: (0.79, 0.57, 0.78),
    Gate.MX90: (0.91, 0.71, 0.83),
    Gate.X180: (1.11, 0.88, 1.09),
    Gate.Y90: (0.96, 0.98, 0.76),
    Gate.MY90: (0.81, 0.52, 0.75),
    Gate.Y180: (1.28, 0.99, 1.67),
    Gate.H: (0.93, 0.86, 1.00),
    Gate.T: (None, 0.71, 0.40),
}
LITERATURE_AVERAGE_RB_INFIDELITY_PERCENT = 0.90
LITERATURE_ENCODE_DECODE_INFIDELITY_PERCENT = 1.70


def _format_value(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float | np.floating):
        value = float(value)
        return "inf" if math.isinf(value) else f"{value:.9g}"
    return str(value)


def format_report(title: str, entries: Mapping[str, object]) -> str:
    """Render ``key: value`` lines under a ``#`` title line."""
    lines = [f"# {title}"]
    lines.extend(f"{key}: {_format_value(value)}" for key, value in entries.items())
    return "\n".join(lines) + "\n"


def literature_entries(gate: Gate | None) -> dict[str, object]:
    """Literature annotations for a gate, or for the benchmarking average when ``gate`` is None."""
    if gate is None:
        return {"literature_average_rb_infidelity_percent": LITERATURE_AVERAGE_RB_INFIDELITY_PERCENT}
    entries: dict[str, object] = {}
    rb, tomography, simulated = LITERATURE_GATE_INFIDELITY_PERCENT[gate]
    if rb is not None:
        entries["literature_rb_infidelity_percent"] = rb
    entries["literature_tomography_infidelity_percent"] = tomography
    entries["literature_simulated_infidelity_percent"] = simulated
    return entries


def format_wigner(grid: WignerGrid) -> str:
    lines = ["# columns: re_beta im_beta wigner untrusted"]
    lines.extend(
        f"{re_beta:.6f} {im_beta:.6f} {value:.9f} {int(flag)}" for re_beta, im_beta, value, flag in grid.rows()
    )
    return "\n".join(lines) + "\n"


def format_ptm(ptm: PauliTransferMatrix, entries: Mapping[str, object] | None = None) -> str:
    lines = [f"# basis: {' '.join(PAULI_LABELS)}"]
    lines.extend(" ".join(f"{value:+.9f}" for value in row) for row in ptm.matrix)
    lines.extend(f"# {key}: {_format_value(value)}" for key, value in (entries or {}).items())
    return "\n".join(lines) + "\n"


def format_rb(result: RBResult, fit: FitResult, extra: Iterable[tuple[str, object]] = ()) -> str:
    """RB table ``n p stderr`` followed by a fit-summary block."""
    lines = ["# columns: n p stderr"]
    lines.extend(f"{length} {probability:.6f} {error:.6f}" for length, probability, error in result.rows())
    summary: dict[str, object] = {
        "amplitude": fit.amplitude,
        "tau": fit.tau,
        "tau_stderr": fit.tau_stderr,
        "error_per_gate": rb_error(fit.tau),
        "residual_rms": fit.residual_rms,
        "shots": result.shots if result.shots is not None else "exact",
        "sequences": result.sequences,
    }
    if result.interleave is not None:
        summary["interleave"] = result.interleave.label
    summary.update(dict(extra))
    lines.extend(f"# {key}: {_format_value(value)}" for key, value in summary.items())
    return "\n".join(lines) + "\n"


def format_error(error: BaseException) -> str:
    entries: dict[str, object] = {"type": type(error).__name__, "message": getattr(error, "reason", str(error))}
    line_number = getattr(error, "line_number", None)
    if line_number is not None:
        entries["line"] = line_number
    key = getattr(error, "key", None)
    if key is not None:
        entries["key"] = key
    return format_report("cat-grape error", entries)
