"""
Experiment plumbing: configuration, waveform files, dispersion correction,
reports and the synthesise-verify-report orchestration behind the command line.
"""

from .atomic_write import atomic_write_text
from .config import (
    DEFAULT_OUTPUT_DIRECTORY,
    BenchmarkingConfig,
    BenchmarkingMode,
    DispersionConfig,
    ExperimentConfig,
    OptimizerConfig,
    PulseConfig,
    SimulationConfig,
    TargetConfig,
    TargetKind,
    TruncationConfig,
    config_document,
    load_config,
    parse_config,
    serialize_config,
)
from .dispersion import dispersion_correction, dispersion_filter
from .problem_builder import build_integrator, build_problem, build_transfer_set, logical_basis
from .reports import (
    LITERATURE_GATE_INFIDELITY_PERCENT,
    format_error,
    format_ptm,
    format_rb,
    format_report,
    format_wigner,
)
from .runner import (
    ERROR_FILE,
    PTM_FILE,
    RB_FILE,
    REPORT_FILE,
    SIMULATION_FILE,
    WIGNER_FILE,
    ExitCode,
    ExperimentRunner,
    RunOutcome,
    run_experiment,
    waveform_file_name,
)
from .waveform_file import COLUMNS, FORMAT_VERSION, WaveformFile, parse_waveform, read_waveform, write_waveform

__all__ = [
    "COLUMNS",
    "DEFAULT_OUTPUT_DIRECTORY",
    "ERROR_FILE",
    "FORMAT_VERSION",
    "LITERATURE_GATE_INFIDELITY_PERCENT",
    "PTM_FILE",
    "RB_FILE",
    "REPORT_FILE",
    "SIMULATION_FILE",
    "WIGNER_FILE",
    "BenchmarkingConfig",
    "BenchmarkingMode",
    "DispersionConfig",
    "ExitCode",
    "ExperimentConfig",
    "ExperimentRunner",
    "OptimizerConfig",
    "PulseConfig",
    "RunOutcome",
    "SimulationConfig",
    "TargetConfig",
    "TargetKind",
    "TruncationConfig",
    "WaveformFile",
    "atomic_write_text",
    "build_integrator",
    "build_problem",
    "build_transfer_set",
    "config_document",
    "dispersion_correction",
    "dispersion_filter",
    "format_error",
    "format_ptm",
    "format_rb",
    "format_report",
    "format_wigner",
    "load_config",
    "logical_basis",
    "parse_config",
    "parse_waveform",
    "read_waveform",
    "run_experiment",
    "serialize_config",
    "waveform_file_name",
    "write_waveform",
]
