"""
Experiment configuration: TOML parsing, validation and serialisation.

Frequencies are written in MHz, decoherence times and the Kerr-correction
delay in microseconds, and the pulse grid and dispersion delay in ns. Parsing
converts everything to rad/ns and ns and validates every value before any
computation starts; errors name the offending key and the line it appears on.
"""

from __future__ import annotations

import math
import re
import tomllib
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

import tomli_w

from cat_grape.benchmarking import DEFAULT_LENGTHS, DEFAULT_LINDBLAD_SEQUENCES, DEFAULT_SHOTS
from cat_grape.catcode import DEFAULT_ALPHA, Gate
from cat_grape.dynamics import DEFAULT_DT_NS
from cat_grape.errors import ConfigParseError
from cat_grape.grape import (
    DEFAULT_EPSILON_MAX,
    DEFAULT_INITIAL_AMPLITUDE,
    DEFAULT_PADS,
    BandLimit,
    OptimizerSettings,
    PenaltyWeights,
)
from cat_grape.lindblad import DEFAULT_SUBSTEPS
from cat_grape.operators import (
    US_TO_NS,
    HamiltonianModel,
    HilbertDims,
    angular_to_megahertz,
    megahertz_to_angular,
)

SERIALISED_DIGITS = 12
DEFAULT_OSCILLATOR_LEVELS = 20
DEFAULT_OUTPUT_DIRECTORY = "out"

_SECTION_PATTERN = re.compile(r"^\s*\[\s*([A-Za-z0-9_]+)\s*\]")
_KEY_PATTERN = re.compile(r"^\s*([A-Za-z0-9_]+)\s*=")
_TOML_LINE_PATTERN = re.compile(r"line (\d+)")

MODEL_KEYS = (
    "chi_mhz",
    "kerr_mhz",
    "chi_prime_mhz",
    "anharmonicity_mhz",
    "t1_transmon_us",
    "tphi_transmon_us",
    "t1_oscillator_us",
    "transmon_frequency_mhz",
    "oscillator_frequency_mhz",
)
SECTION_KEYS = {
    "model": MODEL_KEYS,
    "target": ("kind", "gate", "fock", "delay_us", "alpha", "parity_max_photon"),
    "pulse": ("dt_ns", "steps"),
    "band": ("oscillator_min_mhz", "oscillator_max_mhz", "transmon_min_mhz", "transmon_max_mhz"),
    "penalties": ("amplitude", "derivative", "discrepancy", "epsilon_max_mhz"),
    "truncation": ("oscillator_levels", "transmon_levels", "pads"),
    "optimizer": ("max_iterations", "gradient_tolerance", "fidelity_goal", "memory", "initial_amplitude_mhz"),
    "simulation": ("lindblad", "substeps", "wigner", "wigner_extent", "wigner_points"),
    "dispersion": ("weighting_ns", "delay_ns"),
    "benchmarking": ("mode", "lengths", "shots", "sequences", "interleave"),
}
TOP_LEVEL_KEYS = ("seed", "output_directory")


def _rounded(value: float) -> float:
    if not math.isfinite(value):
        return value
    return float(f"{value:.{SERIALISED_DIGITS}g}")


class TargetKind(StrEnum):
    """What a synthesised pulse should do."""

    GATE = "gate"
    FOCK = "fock"
    ENCODE = "encode"
    DECODE = "decode"
    PARITY = "parity"
    KERR_CORRECT = "kerr_correct"

    @classmethod
    def from_string(cls, value: str | TargetKind) -> TargetKind:
        """
        Parse a target kind, ignoring case and ``-``/``_`` differences.

        Raises:
            ValueError: if the supplied value is not a known kind.
        """
        if isinstance(value, cls):
            return value
        normalised = str(value).strip().lower().replace("-", "_")
        for kind in cls:
            if normalised == kind.value:
                return kind
        raise ValueError(f"Unrecognised target kind value: {value!r}")


class BenchmarkingMode(StrEnum):
    """Which simulation the ``rb`` subcommand runs."""

    PTM = "ptm"
    LINDBLAD = "lindblad"

    @classmethod
    def from_string(cls, value: str | BenchmarkingMode) -> BenchmarkingMode:
        """
        Parse a benchmarking mode.

        Raises:
            ValueError: if the supplied value is not a known mode.
        """
        if isinstance(value, cls):
            return value
        normalised = str(value).strip().lower()
        for mode in cls:
            if normalised == mode.value:
                return mode
        raise ValueError(f"Unrecognised benchmarking mode value: {value!r}")


@dataclass(frozen=True, slots=True)
class TargetConfig:
    """
    The operation to synthesise.

    ``delay`` is the Kerr-correction delay in ns.
    """

    kind: TargetKind
    gate: Gate | None = None
    fock: int | None = None
    delay: float | None = None
    alpha: float = DEFAULT_ALPHA
    parity_max_photon: int | None = None

    def __post_init__(self) -> None:
        """Require the field each kind depends on."""
        if self.kind is TargetKind.GATE and self.gate is None:
            raise ValueError("A gate target needs a gate.")
        if self.kind is TargetKind.FOCK and (self.fock is None or self.fock < 0):
            raise ValueError("A fock target needs a nonnegative photon number.")
        if self.kind is TargetKind.KERR_CORRECT and (self.delay is None or self.delay <= 0):
            raise ValueError("A kerr_correct target needs a positive delay.")
        if self.kind is TargetKind.PARITY and self.parity_max_photon is not None and self.parity_max_photon < 1:
            raise ValueError("parity_max_photon must be at least 1.")
        if self.alpha <= 0:
            raise ValueError("alpha must be greater than zero.")

    @property
    def label(self) -> str:
        """Short name used in output file names, e.g. ``X180`` or ``fock6``."""
        match self.kind:
            case TargetKind.GATE:
                return self.gate.label
            case TargetKind.FOCK:
                return f"fock{self.fock}"
            case _:
                return self.kind.value


@dataclass(frozen=True, slots=True)
class PulseConfig:
    steps: int
    dt: float = DEFAULT_DT_NS

    def __post_init__(self) -> None:
        """Require a non-empty grid with a positive step."""
        if self.steps < 1:
            raise ValueError("steps must be at least 1.")
        if not self.dt > 0:
            raise ValueError("dt must be greater than zero.")

    @property
    def duration(self) -> float:
        return self.steps * self.dt


@dataclass(frozen=True, slots=True)
class TruncationConfig:
    oscillator_levels: int = DEFAULT_OSCILLATOR_LEVELS
    transmon_levels: int = 2
    pads: tuple[int, ...] = DEFAULT_PADS

    @property
    def dims(self) -> HilbertDims:
        return HilbertDims(self.oscillator_levels, self.transmon_levels)


@dataclass(frozen=True, slots=True)
class OptimizerConfig:
    """Optimizer stopping rules and the initial noise amplitude (rad/ns)."""

    max_iterations: int = 500
    gradient_tolerance: float = 1e-9
    fidelity_goal: float = 0.999
    memory: int = 10
    initial_amplitude: float = DEFAULT_INITIAL_AMPLITUDE

    def settings(self, seed: int) -> OptimizerSettings:
        return OptimizerSettings(
            max_iter=self.max_iterations,
            grad_tol=self.gradient_tolerance,
            fidelity_goal=self.fidelity_goal,
            memory_m=self.memory,
            seed=seed,
        )


@dataclass(frozen=True, slots=True)
class SimulationConfig:
    lindblad: bool = True
    substeps: int = DEFAULT_SUBSTEPS
    wigner: bool = False
    wigner_extent: float = 3.0
    wigner_points: int = 41


@dataclass(frozen=True, slots=True)
class DispersionConfig:
    """Weighting coefficient ``b`` and delay ``tau``, both in ns."""

    weighting: float = 0.0
    delay: float = 0.0


@dataclass(frozen=True, slots=True)
class BenchmarkingConfig:
    mode: BenchmarkingMode = BenchmarkingMode.PTM
    lengths: tuple[int, ...] = DEFAULT_LENGTHS
    shots: int = DEFAULT_SHOTS
    sequences: int = DEFAULT_LINDBLAD_SEQUENCES
    interleave: Gate | None = None


@dataclass(frozen=True, slots=True)
class ExperimentConfig:
    """A complete, validated experiment description in internal units."""

    model: HamiltonianModel
    target: TargetConfig
    pulse: PulseConfig
    band: BandLimit = field(default_factory=BandLimit)
    penalties: PenaltyWeights = field(default_factory=PenaltyWeights)
    truncation: TruncationConfig = field(default_factory=TruncationConfig)
    optimizer: OptimizerConfig = field(default_factory=OptimizerConfig)
    simulation: SimulationConfig = field(default_factory=SimulationConfig)
    dispersion: DispersionConfig = field(default_factory=DispersionConfig)
    benchmarking: BenchmarkingConfig = field(default_factory=BenchmarkingConfig)
    seed: int = 0
    output_directory: str = DEFAULT_OUTPUT_DIRECTORY


class _SectionReader:
    """Typed access to one TOML table with line-aware errors."""

    def __init__(self, name: str, table: dict[str, Any], lines: dict[tuple[str, str], int]) -> None:
        self._name = name
        self._table = table
        self._lines = lines

    def error(self, key: str, reason: str) -> ConfigParseError:
        qualified = f"{self._name}.{key}" if self._name else key
        return ConfigParseError(
            f"{qualified} {reason}",
            key=qualified,
            line_number=self._lines.get((self._name, key)),
        )

    def get(self, key: str) -> Any:
        return self._table.get(key)

    def _raw(self, key: str, default: Any, required: bool) -> Any:
        if key not in self._table:
            if required:
                raise self.error(key, "is required")
            return default
        return self._table[key]

    def number(
        self,
        key: str,
        default: float | None = None,
        *,
        required: bool = False,
        positive: bool = False,
        nonnegative: bool = False,
    ) -> float | None:
        value = self._raw(key, default, required)
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, int | float):
            raise self.error(key, f"must be a number, got {value!r}")
        value = float(value)
        if math.isnan(value):
            raise self.error(key, "must not be NaN")
        if positive and not value > 0:
            raise self.error(key, f"must be greater than zero, got {value!r}")
        if nonnegative and value < 0:
            raise self.error(key, f"must not be negative, got {value!r}")
        if not (positive or nonnegative) and not math.isfinite(value):
            raise self.error(key, "must be finite")
        return value

    def integer(self, key: str, default: int | None = None, *, required: bool = False, minimum: int = 0) -> int | None:
        value = self._raw(key, default, required)
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, int):
            raise self.error(key, f"must be an integer, got {value!r}")
        if value < minimum:
            raise self.error(key, f"must be at least {minimum}, got {value}")
        return value

    def flag(self, key: str, default: bool) -> bool:
        value = self._raw(key, default, False)
        if not isinstance(value, bool):
            raise self.error(key, f"must be true or false, got {value!r}")
        return value

    def text(self, key: str, default: str | None = None, *, required: bool = False) -> str | None:
        value = self._raw(key, default, required)
        if value is not None and not isinstance(value, str):
            raise self.error(key, f"must be a string, got {value!r}")
        return value

    def integers(self, key: str, default: tuple[int, ...], *, minimum: int = 0) -> tuple[int, ...]:
        value = self._raw(key, default, False)
        if not isinstance(value, list | tuple) or not value:
            raise self.error(key, "must be a non-empty list of integers")
        if any(isinstance(item, bool) or not isinstance(item, int) or item < minimum for item in value):
            raise self.error(key, f"must contain integers of at least {minimum}")
        return tuple(value)

    def gate(self, key: str) -> Gate | None:
        name = self.text(key)
        if name is None:
            return None
        try:
            return Gate.from_string(name)
        except ValueError as error:
            raise self.error(key, f"is not a known gate: {name!r}") from error


def _line_numbers(text: str) -> dict[tuple[str, str], int]:
    """Map ``(section, key)`` to the 1-based line the key or section header is written on."""
    lines: dict[tuple[str, str], int] = {}
    section = ""
    for number, line in enumerate(text.splitlines(), start=1):
        if match := _SECTION_PATTERN.match(line):
            section = match.group(1)
            lines.setdefault(("", section), number)
        elif match := _KEY_PATTERN.match(line):
            lines.setdefault((section, match.group(1)), number)
    return lines


def _reject_unknown(document: dict[str, Any], lines: dict[tuple[str, str], int]) -> None:
    for key, value in document.items():
        if key in TOP_LEVEL_KEYS:
            continue
        if key not in SECTION_KEYS:
            raise ConfigParseError(f"Unknown section or key: {key}", key=key, line_number=lines.get(("", key)))
        if not isinstance(value, dict):
            raise ConfigParseError(f"{key} must be a table", key=key, line_number=lines.get(("", key)))
        for inner in value:
            if inner not in SECTION_KEYS[key]:
                raise ConfigParseError(
                    f"Unknown key: {key}.{inner}",
                    key=f"{key}.{inner}",
                    line_number=lines.get((key, inner)),
                )


def _checked(reader: _SectionReader, key: str, build: Any, *args: Any, **kwargs: Any) -> Any:
    """Build a value object, reporting its validation errors against ``key``."""
    try:
        return build(*args, **kwargs)
    except ValueError as error:
        raise reader.error(key, f"is invalid: {error}") from error


def _parse_model(reader: _SectionReader) -> HamiltonianModel:
    values = {}
    for key in MODEL_KEYS:
        is_time = key.endswith("_us")
        values[key] = reader.number(key, required=True, positive=is_time)
    return HamiltonianModel.from_megahertz(**values)


def _parse_target(reader: _SectionReader) -> TargetConfig:
    kind_name = reader.text("kind", required=True)
    try:
        kind = TargetKind.from_string(kind_name)
    except ValueError as error:
        raise reader.error("kind", f"is not a known target kind: {kind_name!r}") from error
    gate = reader.gate("gate")
    fock = reader.integer("fock")
    delay_us = reader.number("delay_us", positive=True)
    alpha = reader.number("alpha", DEFAULT_ALPHA, positive=True)
    parity_max_photon = reader.integer("parity_max_photon", minimum=1)
    if kind is TargetKind.GATE and gate is None:
        raise reader.error("gate", "is required for a gate target")
    if kind is TargetKind.FOCK and fock is None:
        raise reader.error("fock", "is required for a fock target")
    if kind is TargetKind.KERR_CORRECT and delay_us is None:
        raise reader.error("delay_us", "is required for a kerr_correct target")
    return TargetConfig(
        kind=kind,
        gate=gate,
        fock=fock,
        delay=delay_us * US_TO_NS if delay_us is not None else None,
        alpha=alpha,
        parity_max_photon=parity_max_photon,
    )


def _parse_band(reader: _SectionReader, pulse: PulseConfig) -> BandLimit:
    defaults = BandLimit()
    edges = {}
    for name in ("oscillator_min", "oscillator_max", "transmon_min", "transmon_max"):
        value = reader.number(f"{name}_mhz", angular_to_megahertz(getattr(defaults, name)))
        edges[name] = megahertz_to_angular(value)
    band = _checked(reader, "oscillator_min_mhz", BandLimit, **edges)
    try:
        band.validate(pulse.dt)
        band.masks(pulse.steps, pulse.dt)
    except ValueError as error:
        raise reader.error("oscillator_min_mhz", f"describes an unusable band: {error}") from error
    return band


def _parse_penalties(reader: _SectionReader) -> PenaltyWeights:
    defaults = PenaltyWeights()
    if isinstance(reader.get("epsilon_max_mhz"), list):
        caps = reader.get("epsilon_max_mhz")
        if len(caps) != 2 or any(isinstance(cap, bool) or not isinstance(cap, int | float) or cap <= 0 for cap in caps):
            raise reader.error("epsilon_max_mhz", "must be a positive number or an [oscillator, transmon] pair")
        epsilon_max: float | tuple[float, float] = (megahertz_to_angular(caps[0]), megahertz_to_angular(caps[1]))
    else:
        epsilon_max = megahertz_to_angular(
            reader.number("epsilon_max_mhz", angular_to_megahertz(DEFAULT_EPSILON_MAX), positive=True)
        )
    return PenaltyWeights(
        lambda_amplitude=reader.number("amplitude", defaults.lambda_amplitude, nonnegative=True),
        lambda_derivative=reader.number("derivative", defaults.lambda_derivative, nonnegative=True),
        lambda_discrepancy=reader.number("discrepancy", defaults.lambda_discrepancy, nonnegative=True),
        epsilon_max=epsilon_max,
    )


def _parse_truncation(reader: _SectionReader) -> TruncationConfig:
    levels = reader.integer("oscillator_levels", DEFAULT_OSCILLATOR_LEVELS, minimum=2)
    transmon = reader.integer("transmon_levels", 2, minimum=2)
    pads = reader.integers("pads", DEFAULT_PADS)
    if len(set(pads)) != len(pads):
        raise reader.error("pads", "must not repeat a value")
    return TruncationConfig(oscillator_levels=levels, transmon_levels=transmon, pads=tuple(sorted(pads)))


def _parse_optimizer(reader: _SectionReader) -> OptimizerConfig:
    defaults = OptimizerConfig()
    goal = reader.number("fidelity_goal", defaults.fidelity_goal, positive=True)
    if goal > 1:
        raise reader.error("fidelity_goal", f"must not exceed 1, got {goal!r}")
    amplitude = reader.number(
        "initial_amplitude_mhz", angular_to_megahertz(defaults.initial_amplitude), nonnegative=True
    )
    return OptimizerConfig(
        max_iterations=reader.integer("max_iterations", defaults.max_iterations),
        gradient_tolerance=reader.number("gradient_tolerance", defaults.gradient_tolerance, nonnegative=True),
        fidelity_goal=goal,
        memory=reader.integer("memory", defaults.memory, minimum=1),
        initial_amplitude=megahertz_to_angular(amplitude),
    )


def _parse_simulation(reader: _SectionReader) -> SimulationConfig:
    defaults = SimulationConfig()
    return SimulationConfig(
        lindblad=reader.flag("lindblad", defaults.lindblad),
        substeps=reader.integer("substeps", defaults.substeps, minimum=1),
        wigner=reader.flag("wigner", defaults.wigner),
        wigner_extent=reader.number("wigner_extent", defaults.wigner_extent, positive=True),
        wigner_points=reader.integer("wigner_points", defaults.wigner_points, minimum=2),
    )


def _parse_benchmarking(reader: _SectionReader) -> BenchmarkingConfig:
    defaults = BenchmarkingConfig()
    mode_name = reader.text("mode", defaults.mode.value)
    try:
        mode = BenchmarkingMode.from_string(mode_name)
    except ValueError as error:
        raise reader.error("mode", f"is not a known benchmarking mode: {mode_name!r}") from error
    return BenchmarkingConfig(
        mode=mode,
        lengths=reader.integers("lengths", defaults.lengths, minimum=1),
        shots=reader.integer("shots", defaults.shots, minimum=1),
        sequences=reader.integer("sequences", defaults.sequences, minimum=1),
        interleave=reader.gate("interleave"),
    )


def _toml_line(error: tomllib.TOMLDecodeError) -> int | None:
    match = _TOML_LINE_PATTERN.search(str(error))
    return int(match.group(1)) if match else None


def parse_config(text: str) -> ExperimentConfig:
    """
    Parse and validate an experiment configuration.

    Raises:
        ConfigParseError: on malformed TOML, unknown or missing keys, wrong types and
            out-of-range values. The error names the key and its line when known.
    """
    try:
        document = tomllib.loads(text)
    except tomllib.TOMLDecodeError as error:
        raise ConfigParseError(f"Malformed configuration: {error}", line_number=_toml_line(error)) from error
    lines = _line_numbers(text)
    _reject_unknown(document, lines)

    def section(name: str) -> _SectionReader:
        return _SectionReader(name, document.get(name, {}), lines)

    if "model" not in document:
        raise ConfigParseError("missing model", key="model")
    if not document.get("target"):
        raise ConfigParseError("missing target", key="target", line_number=lines.get(("", "target")))
    if "pulse" not in document:
        raise ConfigParseError("missing pulse", key="pulse")

    pulse_reader = section("pulse")
    pulse = PulseConfig(
        steps=pulse_reader.integer("steps", required=True, minimum=1),
        dt=pulse_reader.number("dt_ns", DEFAULT_DT_NS, positive=True),
    )
    target_reader = section("target")
    target = _checked(target_reader, "kind", _parse_target, target_reader)
    top = _SectionReader("", document, lines)
    dispersion = section("dispersion")
    return ExperimentConfig(
        model=_parse_model(section("model")),
        target=target,
        pulse=pulse,
        band=_parse_band(section("band"), pulse),
        penalties=_parse_penalties(section("penalties")),
        truncation=_parse_truncation(section("truncation")),
        optimizer=_parse_optimizer(section("optimizer")),
        simulation=_parse_simulation(section("simulation")),
        dispersion=DispersionConfig(
            weighting=dispersion.number("weighting_ns", 0.0),
            delay=dispersion.number("delay_ns", 0.0),
        ),
        benchmarking=_parse_benchmarking(section("benchmarking")),
        seed=top.integer("seed", 0),
        output_directory=top.text("output_directory", DEFAULT_OUTPUT_DIRECTORY),
    )


def _model_table(model: HamiltonianModel) -> dict[str, float]:
    return {
        "chi_mhz": _rounded(angular_to_megahertz(model.chi)),
        "kerr_mhz": _rounded(angular_to_megahertz(model.kerr)),
        "chi_prime_mhz": _rounded(angular_to_megahertz(model.chi_prime)),
        "anharmonicity_mhz": _rounded(angular_to_megahertz(model.anh)),
        "t1_transmon_us": _rounded(model.t1_trans / US_TO_NS),
        "tphi_transmon_us": _rounded(model.tphi_trans / US_TO_NS),
        "t1_oscillator_us": _rounded(model.t1_osc / US_TO_NS),
        "transmon_frequency_mhz": _rounded(angular_to_megahertz(model.omega_t)),
        "oscillator_frequency_mhz": _rounded(angular_to_megahertz(model.omega_c)),
    }


def _target_table(target: TargetConfig) -> dict[str, Any]:
    table: dict[str, Any] = {"kind": target.kind.value}
    if target.gate is not None:
        table["gate"] = target.gate.label
    if target.fock is not None:
        table["fock"] = target.fock
    if target.delay is not None:
        table["delay_us"] = _rounded(target.delay / US_TO_NS)
    table["alpha"] = _rounded(target.alpha)
    if target.parity_max_photon is not None:
        table["parity_max_photon"] = target.parity_max_photon
    return table


def _epsilon_table(penalties: PenaltyWeights) -> float | list[float]:
    if isinstance(penalties.epsilon_max, tuple):
        return [_rounded(angular_to_megahertz(cap)) for cap in penalties.epsilon_max]
    return _rounded(angular_to_megahertz(penalties.epsilon_max))


def config_document(config: ExperimentConfig) -> dict[str, Any]:
    """Return the configuration as a TOML-ready mapping in file units."""
    benchmarking: dict[str, Any] = {
        "mode": config.benchmarking.mode.value,
        "lengths": list(config.benchmarking.lengths),
        "shots": config.benchmarking.shots,
        "sequences": config.benchmarking.sequences,
    }
    if config.benchmarking.interleave is not None:
        benchmarking["interleave"] = config.benchmarking.interleave.label
    return {
        "seed": config.seed,
        "output_directory": config.output_directory,
        "model": _model_table(config.model),
        "target": _target_table(config.target),
        "pulse": {"dt_ns": _rounded(config.pulse.dt), "steps": config.pulse.steps},
        "band": {
            f"{name}_mhz": _rounded(angular_to_megahertz(getattr(config.band, name)))
            for name in ("oscillator_min", "oscillator_max", "transmon_min", "transmon_max")
        },
        "penalties": {
            "amplitude": _rounded(config.penalties.lambda_amplitude),
            "derivative": _rounded(config.penalties.lambda_derivative),
            "discrepancy": _rounded(config.penalties.lambda_discrepancy),
            "epsilon_max_mhz": _epsilon_table(config.penalties),
        },
        "truncation": {
            "oscillator_levels": config.truncation.oscillator_levels,
            "transmon_levels": config.truncation.transmon_levels,
            "pads": list(config.truncation.pads),
        },
        "optimizer": {
            "max_iterations": config.optimizer.max_iterations,
            "gradient_tolerance": _rounded(config.optimizer.gradient_tolerance),
            "fidelity_goal": _rounded(config.optimizer.fidelity_goal),
            "memory": config.optimizer.memory,
            "initial_amplitude_mhz": _rounded(angular_to_megahertz(config.optimizer.initial_amplitude)),
        },
        "simulation": {
            "lindblad": config.simulation.lindblad,
            "substeps": config.simulation.substeps,
            "wigner": config.simulation.wigner,
            "wigner_extent": _rounded(config.simulation.wigner_extent),
            "wigner_points": config.simulation.wigner_points,
        },
        "dispersion": {
            "weighting_ns": _rounded(config.dispersion.weighting),
            "delay_ns": _rounded(config.dispersion.delay),
        },
        "benchmarking": benchmarking,
    }


def serialize_config(config: ExperimentConfig) -> str:
    """Write a configuration back to TOML with floats rounded to 12 significant digits."""
    return tomli_w.dumps(config_document(config))


def load_config(path: str) -> ExperimentConfig:
    """Read and parse a configuration file."""
    with open(path, encoding="utf-8") as handle:
        return parse_config(handle.read())
