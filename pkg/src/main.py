"""
Command-line entry point for cat-grape pulse synthesis and verification.

Environment variables:
    CAT_GRAPE_LOG_LEVEL: Optional. Logging level used when --log-level is not given.
"""

from __future__ import annotations

import argparse
import dataclasses
import logging
import sys
from pathlib import Path

from cat_grape.errors import CatGrapeError
from cat_grape.experiment import (
    DEFAULT_OUTPUT_DIRECTORY,
    ERROR_FILE,
    ExitCode,
    ExperimentConfig,
    ExperimentRunner,
    RunOutcome,
    atomic_write_text,
    format_error,
    load_config,
)
from env_settings import resolve_log_level

SUBCOMMANDS = ("synthesize", "simulate", "wigner", "ptomo", "rb", "correct")
WAVEFORM_SUBCOMMANDS = ("simulate", "wigner", "ptomo", "correct")


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        description="Synthesise optimal-control pulses for a cat-code logical qubit and verify them in simulation."
    )
    parser.add_argument("command", choices=SUBCOMMANDS, help="Flow to run.")
    parser.add_argument("--config", required=True, help="Path to the TOML experiment configuration.")
    parser.add_argument("--seed", type=int, help="Override the configured random seed.")
    parser.add_argument("--out", help="Override the configured output directory.")
    parser.add_argument(
        "--waveform",
        help="Waveform file to verify (simulate, wigner, ptomo, correct). Defaults to the target's file.",
    )
    parser.add_argument(
        "--waveform-dir",
        help="Directory holding previously synthesised waveforms. Defaults to the output directory.",
    )
    parser.add_argument("--log-level", help="Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL).")
    args = parser.parse_args(argv)
    if args.waveform and args.command not in WAVEFORM_SUBCOMMANDS:
        parser.error(f"--waveform is not used by {args.command}.")
    return args


def apply_overrides(config: ExperimentConfig, args: argparse.Namespace) -> ExperimentConfig:
    """Apply --seed and --out to a parsed configuration."""
    changes: dict[str, object] = {}
    if args.seed is not None:
        changes["seed"] = args.seed
    if args.out is not None:
        changes["output_directory"] = args.out
    return dataclasses.replace(config, **changes) if changes else config


def run_command(runner: ExperimentRunner, args: argparse.Namespace) -> RunOutcome:
    match args.command:
        case "synthesize":
            return runner.synthesize()
        case "simulate":
            return runner.simulate(args.waveform)
        case "wigner":
            return runner.wigner(args.waveform)
        case "ptomo":
            return runner.ptomo(args.waveform)
        case "rb":
            return runner.rb()
        case "correct":
            return runner.correct(args.waveform)
    raise ValueError(f"Unrecognised command: {args.command}")


def print_outcome(command: str, outcome: RunOutcome) -> None:
    print(f"{command}: exit code {int(outcome.exit_code)}", flush=True)
    for key, value in outcome.summary.items():
        print(f"  {key}: {value}", flush=True)
    for path in outcome.files:
        print(f"- wrote {path}", flush=True)


def report_error(error: Exception, output_directory: Path) -> None:
    print(f"error: {error}", file=sys.stderr, flush=True)
    try:
        atomic_write_text(output_directory / ERROR_FILE, format_error(error))
    except OSError as write_error:
        print(f"error: could not write {ERROR_FILE}: {write_error}", file=sys.stderr, flush=True)


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    try:
        level = resolve_log_level(args.log_level)
    except ValueError as error:
        print(f"error: {error}", file=sys.stderr, flush=True)
        return int(ExitCode.ERROR)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    output_directory = Path(args.out or DEFAULT_OUTPUT_DIRECTORY)
    try:
        config = apply_overrides(load_config(args.config), args)
        output_directory = Path(config.output_directory)
        runner = ExperimentRunner(config, waveform_directory=args.waveform_dir)
        outcome = run_command(runner, args)
    except (CatGrapeError, OSError, ValueError) as error:
        logging.getLogger(__name__).debug("command failed", exc_info=error)
        report_error(error, output_directory)
        return int(ExitCode.ERROR)
    print_outcome(args.command, outcome)
    return int(outcome.exit_code)


if __name__ == "__main__":
    sys.exit(main())
