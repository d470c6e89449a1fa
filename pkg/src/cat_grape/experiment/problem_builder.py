"""Translate a validated configuration into library objects."""

from __future__ import annotations

from cat_grape.catcode import (
    LogicalBasis,
    decode_transfer_set,
    default_parity_probes,
    encode_transfer_set,
    fock_preparation_set,
    gate_transfer_set,
    kerr_correction_target,
    parity_map_set,
)
from cat_grape.dynamics import GradientMethod, StateTransferSet
from cat_grape.experiment.config import ExperimentConfig, TargetKind
from cat_grape.grape import OptimizationProblem
from cat_grape.lindblad import DecoherenceSpec, LindbladIntegrator
from cat_grape.operators import build_static_hamiltonian

DEFAULT_PARITY_PROBES = 8


def logical_basis(config: ExperimentConfig) -> LogicalBasis:
    return LogicalBasis(config.truncation.dims, alpha=config.target.alpha)


def build_transfer_set(config: ExperimentConfig) -> StateTransferSet:
    """Return the transfers of the configured target at the base truncation."""
    dims = config.truncation.dims
    target = config.target
    match target.kind:
        case TargetKind.GATE:
            return gate_transfer_set(logical_basis(config), target.gate)
        case TargetKind.FOCK:
            return fock_preparation_set(dims, target.fock)
        case TargetKind.ENCODE:
            return encode_transfer_set(logical_basis(config))
        case TargetKind.DECODE:
            return decode_transfer_set(logical_basis(config))
        case TargetKind.PARITY:
            n_max = target.parity_max_photon or min(DEFAULT_PARITY_PROBES, dims.n_osc)
            return parity_map_set(default_parity_probes(dims, n_max), dims)
        case TargetKind.KERR_CORRECT:
            return kerr_correction_target(logical_basis(config), config.model, target.delay)


def build_problem(config: ExperimentConfig) -> OptimizationProblem:
    """Return the synthesis problem described by ``config``."""
    return OptimizationProblem(
        model=config.model,
        transfers=build_transfer_set(config),
        steps=config.pulse.steps,
        dt=config.pulse.dt,
        pads=config.truncation.pads,
        weights=config.penalties,
        band=config.band,
        initial_amplitude=config.optimizer.initial_amplitude,
        gradient_method=GradientMethod.EXACT,
    )


def build_integrator(config: ExperimentConfig, decoherence: DecoherenceSpec | None = None) -> LindbladIntegrator:
    """Return a master-equation integrator at the base truncation."""
    dims = config.truncation.dims
    return LindbladIntegrator(
        build_static_hamiltonian(config.model, dims),
        dims,
        decoherence or DecoherenceSpec.from_model(config.model),
        substeps=config.simulation.substeps,
    )
