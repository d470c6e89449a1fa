"""
Experiment orchestration: synthesise a pulse, verify it, and write reports.

Every subcommand of the command-line tool maps onto one method of
:class:`ExperimentRunner`. Output files are written atomically into the
configured output directory and never contain timestamps, so identical
configurations and seeds give byte-identical files.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import IntEnum
from pathlib import Path

import numpy as np

from cat_grape.benchmarking import (
    GateChannelSet,
    default_group,
    irb_error,
    rb_error,
    run_lindblad_rb,
    run_rb,
)
from cat_grape.catcode import Gate, LogicalBasis
from cat_grape.dynamics import ControlWaveform, total_propagator
from cat_grape.experiment.atomic_write import atomic_write_text
from cat_grape.experiment.config import BenchmarkingMode, ExperimentConfig, TargetKind
from cat_grape.experiment.dispersion import dispersion_correction
from cat_grape.experiment.problem_builder import build_integrator, build_problem, build_transfer_set, logical_basis
from cat_grape.experiment.reports import (
    LITERATURE_ENCODE_DECODE_INFIDELITY_PERCENT,
    format_ptm,
    format_rb,
    format_report,
    format_wigner,
    literature_entries,
)
from cat_grape.experiment.waveform_file import WaveformFile, read_waveform, write_waveform
from cat_grape.grape import OptimizationResult, evaluate_waveform, optimize
from cat_grape.lindblad import (
    RATE_NAMES,
    DecoherenceSpec,
    LindbladIntegrator,
    LogicalChannel,
    dephasing_sensitivity,
    pure_density,
    simulate_logical_channel,
    simulated_gate_fidelity,
    simulated_transfer_fidelity,
    transmon_isometry,
)
from cat_grape.operators import build_static_hamiltonian
from cat_grape.tomography import (
    LITERATURE_ENCODE_DECODE_FIDELITY,
    LITERATURE_NO_OP_FIDELITY,
    PauliTransferMatrix,
    average_fidelity,
    delta_fidelity,
    process_tomography,
    ptm_from_unitary,
    reduce_to_oscillator,
    square_lattice,
    wigner as displaced_parity_wigner,
)

logger = logging.getLogger(__name__)

REPORT_FILE = "report.txt"
SIMULATION_FILE = "simulation.txt"
WIGNER_FILE = "wigner.txt"
PTM_FILE = "ptm.txt"
RB_FILE = "rb.txt"
ERROR_FILE = "error.txt"


class ExitCode(IntEnum):
    SUCCESS = 0
    ERROR = 1
    BELOW_GOAL = 2


@dataclass(frozen=True, eq=False)
class RunOutcome:
    """Files written by one subcommand and the summary printed for the user."""

    exit_code: ExitCode
    files: tuple[Path, ...]
    summary: dict[str, object] = field(default_factory=dict)


def waveform_file_name(label: str) -> str:
    return f"waveform_{label}.txt"


class ExperimentRunner:
    """Run the synthesis and verification flows for one configuration."""

    def __init__(self, config: ExperimentConfig, *, waveform_directory: str | Path | None = None) -> None:
        self._config = config
        self._output = Path(config.output_directory)
        self._waveform_directory = Path(waveform_directory) if waveform_directory is not None else self._output
        self._basis: LogicalBasis | None = None

    @property
    def config(self) -> ExperimentConfig:
        return self._config

    @property
    def output_directory(self) -> Path:
        return self._output

    def _logical_basis(self) -> LogicalBasis:
        if self._basis is None:
            self._basis = logical_basis(self._config)
        return self._basis

    def _write(self, name: str, text: str) -> Path:
        return atomic_write_text(self._output / name, text)

    def default_waveform_path(self, label: str | None = None) -> Path:
        return self._waveform_directory / waveform_file_name(label or self._config.target.label)

    def load_waveform(self, path: str | Path | None = None) -> ControlWaveform:
        """Read a waveform, warning when it was written for different model parameters."""
        waveform_file = read_waveform(path or self.default_waveform_path())
        expected = self._config.model.fingerprint()
        if waveform_file.model_hash and waveform_file.model_hash != expected:
            logger.warning(
                "Waveform was synthesised for model %s, configuration has model %s.",
                waveform_file.model_hash,
                expected,
            )
        return waveform_file.waveform

    def synthesize(self) -> RunOutcome:
        """Optimise the configured target, then write its waveform and report."""
        config = self._config
        problem = build_problem(config)
        result = optimize(problem, config.optimizer.settings(config.seed))
        files = [
            write_waveform(
                self._output / waveform_file_name(config.target.label),
                WaveformFile.for_model(result.waveform, config.model),
            )
        ]
        entries = self._synthesis_entries(result)
        entries["transmon_excited_population"] = self._excited_population(result.waveform)
        if config.simulation.lindblad:
            entries.update(self._simulation_entries(result.waveform))
        if config.simulation.wigner:
            files.append(self._write_wigner(result.waveform))
        files.append(self._write(REPORT_FILE, format_report("cat-grape synthesis report", entries)))
        exit_code = ExitCode.SUCCESS if result.goal_met else ExitCode.BELOW_GOAL
        return RunOutcome(exit_code, tuple(files), entries)

    def simulate(self, waveform_path: str | Path | None = None) -> RunOutcome:
        """Verify an existing waveform in the closed and open system."""
        config = self._config
        waveform = self.load_waveform(waveform_path)
        problem = build_problem(config)
        fidelities = evaluate_waveform(problem, waveform)
        entries: dict[str, object] = {"target": config.target.label}
        for dims, fidelity in zip(problem.truncations, fidelities, strict=True):
            entries[f"closed_fidelity_n{dims.n_osc}"] = fidelity
        entries["closed_mean_fidelity"] = float(np.mean(fidelities))
        entries["transmon_excited_population"] = self._excited_population(waveform)
        entries.update(self._simulation_entries(waveform))
        if config.target.kind is TargetKind.GATE:
            sensitivity = dephasing_sensitivity(
                waveform, config.target.gate, self._logical_basis(), config.model, substeps=config.simulation.substeps
            )
            for name in RATE_NAMES:
                entries[f"infidelity_without_{name}"] = sensitivity[name]
            if sensitivity["all"] > 0:
                entries["transmon_dephasing_share"] = 1.0 - sensitivity["transmon_dephasing"] / sensitivity["all"]
        path = self._write(SIMULATION_FILE, format_report("cat-grape simulation report", entries))
        return RunOutcome(ExitCode.SUCCESS, (path,), entries)

    def wigner(self, waveform_path: str | Path | None = None) -> RunOutcome:
        """Write the Wigner function of the state the waveform prepares from the first transfer input."""
        path = self._write_wigner(self.load_waveform(waveform_path))
        return RunOutcome(ExitCode.SUCCESS, (path,), {"wigner": str(path)})

    def ptomo(self, waveform_path: str | Path | None = None) -> RunOutcome:
        """
        Process tomography of a gate pulse.

        When encoding and decoding pulses are available the transmon is measured
        after ``decode . gate . encode`` and after ``decode . encode`` alone, and the
        difference of the two fidelities isolates the gate. Otherwise the gate is
        characterised directly in the code space.
        """
        config = self._config
        if config.target.kind is not TargetKind.GATE:
            raise ValueError("Process tomography needs a gate target.")
        gate = config.target.gate
        waveform = self.load_waveform(waveform_path)
        integrator = build_integrator(config)
        ideal = ptm_from_unitary(gate.unitary())
        encode_path = self.default_waveform_path(TargetKind.ENCODE.value)
        decode_path = self.default_waveform_path(TargetKind.DECODE.value)

        entries: dict[str, object] = {"gate": gate.label}
        if encode_path.exists() and decode_path.exists():
            encode = self.load_waveform(encode_path)
            decode = self.load_waveform(decode_path)
            full = process_tomography(self._transmon_evaluator(integrator, (encode, waveform, decode)))
            bracket = process_tomography(self._transmon_evaluator(integrator, (encode, decode)))
            entries["average_fidelity"] = average_fidelity(full, ideal)
            entries["encode_decode_fidelity"] = average_fidelity(bracket, PauliTransferMatrix.identity())
            entries["delta_fidelity"] = delta_fidelity(full, bracket, ideal)
            entries["literature_encode_decode_fidelity"] = LITERATURE_ENCODE_DECODE_FIDELITY
            entries["literature_no_op_fidelity"] = LITERATURE_NO_OP_FIDELITY
            measured = full
        else:
            logger.info("No encoding and decoding pulses found; characterising the gate in the code space.")
            channel = simulated_gate_fidelity(
                waveform,
                gate,
                self._logical_basis(),
                DecoherenceSpec.from_model(config.model),
                config.model,
                substeps=config.simulation.substeps,
            )
            measured = channel.ptm.completed()
            entries["average_fidelity"] = average_fidelity(measured, ideal)
            entries["leakage"] = channel.leakage
        entries.update(literature_entries(gate))
        path = self._write(PTM_FILE, format_ptm(measured, entries))
        return RunOutcome(ExitCode.SUCCESS, (path,), entries)

    def rb(self) -> RunOutcome:
        """Benchmark the synthesised gate set read from the waveform directory."""
        config = self._config
        settings = config.benchmarking
        gates = [*default_group().generators]
        if settings.interleave is not None and settings.interleave not in gates:
            gates.append(settings.interleave)
        waveforms = {gate: self._gate_waveform(gate) for gate in gates}
        integrator = build_integrator(config)

        if settings.mode is BenchmarkingMode.LINDBLAD:
            channel_set = GateChannelSet(waveforms=waveforms)
            encode = self.load_waveform(self.default_waveform_path(TargetKind.ENCODE.value))
            decode = self.load_waveform(self.default_waveform_path(TargetKind.DECODE.value))

            def run(interleave: Gate | None):
                return run_lindblad_rb(
                    channel_set,
                    encode,
                    decode,
                    integrator,
                    settings.lengths,
                    settings.sequences,
                    seed=config.seed,
                    interleave=interleave,
                )

        else:
            basis = self._logical_basis()
            decoherence = DecoherenceSpec.from_model(config.model)
            simulated = {
                gate: simulated_gate_fidelity(
                    waveform, gate, basis, decoherence, config.model, substeps=config.simulation.substeps
                )
                for gate, waveform in waveforms.items()
            }
            channel_set = GateChannelSet.from_logical_channels(simulated, waveforms)

            def run(interleave: Gate | None):
                return run_rb(channel_set, settings.lengths, settings.shots, seed=config.seed, interleave=interleave)

        reference = run(None)
        reference_fit = reference.fit()
        extra: list[tuple[str, object]] = [
            ("note", "pulses are re-optimised, so literature values are for comparison only"),
            *literature_entries(None).items(),
        ]
        summary: dict[str, object] = {"tau": reference_fit.tau, "error_per_gate": rb_error(reference_fit.tau)}
        text = format_rb(reference, reference_fit, extra)
        if settings.interleave is not None:
            interleaved = run(settings.interleave)
            interleaved_fit = interleaved.fit()
            gate_error = (
                irb_error(interleaved_fit.tau, reference_fit.tau)
                if interleaved_fit.decaying and reference_fit.decaying
                else 0.0
            )
            summary["interleaved_gate_error"] = gate_error
            text += format_rb(
                interleaved,
                interleaved_fit,
                [("interleaved_gate_error", gate_error), *literature_entries(settings.interleave).items()],
            )
        path = self._write(RB_FILE, text)
        return RunOutcome(ExitCode.SUCCESS, (path,), summary)

    def correct(self, waveform_path: str | Path | None = None) -> RunOutcome:
        """Apply the dispersion and delay pre-distortion to a waveform."""
        config = self._config
        waveform = self.load_waveform(waveform_path)
        corrected = dispersion_correction(waveform, config.dispersion.weighting, config.dispersion.delay)
        path = write_waveform(
            self._output / waveform_file_name(f"{config.target.label}_corrected"),
            WaveformFile.for_model(corrected, config.model),
        )
        return RunOutcome(ExitCode.SUCCESS, (path,), {"corrected": str(path)})

    def _gate_waveform(self, gate: Gate) -> ControlWaveform:
        path = self.default_waveform_path(gate.label)
        if not path.exists() and gate is Gate.I:
            logger.info("No identity pulse found; idling for one pulse length instead.")
            return ControlWaveform.zeros(self._config.pulse.steps, dt=self._config.pulse.dt)
        return self.load_waveform(path)

    def _synthesis_entries(self, result: OptimizationResult) -> dict[str, object]:
        config = self._config
        entries: dict[str, object] = {
            "target": config.target.label,
            "steps": config.pulse.steps,
            "dt_ns": config.pulse.dt,
            "duration_ns": config.pulse.duration,
            "seed": config.seed,
            "termination": result.reason.value,
            "iterations": result.iterations,
            "fidelity_goal": result.fidelity_goal,
            "goal_met": result.goal_met,
        }
        for dims, fidelity in zip(result.truncations, result.fidelities, strict=True):
            entries[f"closed_fidelity_n{dims.n_osc}"] = fidelity
        entries["closed_mean_fidelity"] = result.fidelity
        entries["truncation_discrepancy"] = result.discrepancy
        for name, value in result.penalties.items():
            entries[f"penalty_{name}"] = value
        entries["cost"] = result.cost
        return entries

    def _excited_population(self, waveform: ControlWaveform) -> float:
        """Mean population outside the transmon ground state after the pulse, closed system."""
        transfers = build_transfer_set(self._config)
        dims = transfers.dims
        U = total_propagator(waveform, build_static_hamiltonian(self._config.model, dims), dims)
        finals = transfers.initial @ U.T
        populations = np.abs(finals.reshape(len(finals), dims.n_osc, dims.n_trans)) ** 2
        return float(np.mean(populations[:, :, 1:].sum(axis=(1, 2))))

    def _simulation_entries(self, waveform: ControlWaveform) -> dict[str, object]:
        config = self._config
        target = config.target
        dims = config.truncation.dims
        entries: dict[str, object] = {}
        if target.kind is TargetKind.GATE:
            channel = simulated_gate_fidelity(
                waveform,
                target.gate,
                self._logical_basis(),
                DecoherenceSpec.from_model(config.model),
                config.model,
                substeps=config.simulation.substeps,
            )
            entries.update(_channel_entries(channel))
            entries.update(literature_entries(target.gate))
        elif target.kind in (TargetKind.ENCODE, TargetKind.DECODE):
            code = self._logical_basis().isometry()
            transmon = transmon_isometry(dims)
            source, destination = (transmon, code) if target.kind is TargetKind.ENCODE else (code, transmon)
            channel = simulate_logical_channel(
                waveform, build_integrator(config), source, destination, np.eye(2, dtype=complex)
            )
            entries.update(_channel_entries(channel))
            entries["literature_encode_decode_infidelity_percent"] = LITERATURE_ENCODE_DECODE_INFIDELITY_PERCENT
        else:
            entries["lindblad_transfer_fidelity"] = simulated_transfer_fidelity(
                waveform, build_transfer_set(config), build_integrator(config)
            )
        return entries

    def _write_wigner(self, waveform: ControlWaveform) -> Path:
        config = self._config
        transfers = build_transfer_set(config)
        initial = pure_density(transfers.initial[0])
        if config.simulation.lindblad:
            rho = build_integrator(config).evolve(initial, waveform)
        else:
            U = total_propagator(waveform, build_static_hamiltonian(config.model, transfers.dims), transfers.dims)
            rho = U @ initial @ U.conj().T
        betas = square_lattice(config.simulation.wigner_extent, config.simulation.wigner_points)
        grid = displaced_parity_wigner(reduce_to_oscillator(rho, transfers.dims), betas)
        return self._write(WIGNER_FILE, format_wigner(grid))

    @staticmethod
    def _transmon_evaluator(integrator: LindbladIntegrator, pulses: tuple[ControlWaveform, ...]):
        """Map a transmon qubit state through ``pulses`` and trace out the oscillator."""
        dims = integrator.dims
        isometry = transmon_isometry(dims)

        def evaluate(rho_qubit: np.ndarray) -> np.ndarray:
            rho = isometry @ rho_qubit @ isometry.conj().T
            for pulse in pulses:
                rho = integrator.evolve(rho, pulse)
            reduced = np.einsum("aiaj->ij", rho.reshape(dims.n_osc, dims.n_trans, dims.n_osc, dims.n_trans))
            return reduced[:2, :2]

        return evaluate


def _channel_entries(channel: LogicalChannel) -> dict[str, object]:
    return {
        "lindblad_average_fidelity": channel.average_fidelity,
        "lindblad_infidelity": channel.infidelity,
        "leakage": channel.leakage,
    }


def run_experiment(config: ExperimentConfig) -> RunOutcome:
    """Synthesise and verify the configured target end to end."""
    return ExperimentRunner(config).synthesize()
