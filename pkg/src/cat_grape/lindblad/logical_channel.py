"""
Logical channels and decoherence-limited fidelities of synthesised pulses.

A pulse is characterised by evolving the four logical inputs ``+Z``, ``-Z``,
``+X`` and ``+Y``, projecting each output back onto the output code space and
assembling a Pauli transfer matrix. Population that leaves the code space is
reported as leakage rather than renormalised away.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass

import numpy as np

from cat_grape.catcode import Gate, LogicalBasis
from cat_grape.dynamics import ControlWaveform, StateTransferSet
from cat_grape.lindblad.decoherence import RATE_NAMES, DecoherenceSpec
from cat_grape.lindblad.density_matrix import pure_density, state_fidelity
from cat_grape.lindblad.evolution import LindbladIntegrator
from cat_grape.operators import HamiltonianModel, HilbertDims, build_static_hamiltonian
from cat_grape.tomography.pauli_transfer_matrix import PauliTransferMatrix, ptm_from_outputs, ptm_from_unitary

LOGICAL_INPUTS = {
    "+Z": np.array([1.0, 0.0], dtype=complex),
    "-Z": np.array([0.0, 1.0], dtype=complex),
    "+X": np.array([1.0, 1.0], dtype=complex) / math.sqrt(2),
    "+Y": np.array([1.0, 1j], dtype=complex) / math.sqrt(2),
}


@dataclass(frozen=True, eq=False)
class LogicalChannel:
    """Simulated qubit channel of one pulse, with its leakage and average fidelity."""

    ptm: PauliTransferMatrix
    ideal: PauliTransferMatrix
    leakage: float
    average_fidelity: float

    @property
    def infidelity(self) -> float:
        return 1.0 - self.average_fidelity


def leaky_average_fidelity(measured: PauliTransferMatrix, ideal: PauliTransferMatrix) -> float:
    """Return ``(Tr(R_ideal^T R) / 2 + 1) / 3`` without requiring trace preservation."""
    return float((np.trace(ideal.matrix.T @ measured.matrix) / 2.0 + 1.0) / 3.0)


def simulate_logical_channel(
    waveform: ControlWaveform,
    integrator: LindbladIntegrator,
    input_isometry: np.ndarray,
    output_isometry: np.ndarray,
    ideal_unitary: np.ndarray,
) -> LogicalChannel:
    """
    Return the logical channel of a pulse between two qubit subspaces.

    Args:
        waveform: The pulse.
        integrator: Master-equation integrator for the system and noise model.
        input_isometry: ``(d, 2)`` matrix embedding the input qubit.
        output_isometry: ``(d, 2)`` matrix onto whose span outputs are projected.
        ideal_unitary: The 2x2 operation the pulse should implement.
    """
    outputs: dict[str, np.ndarray] = {}
    leakage = []
    for label, qubit in LOGICAL_INPUTS.items():
        rho = integrator.evolve(pure_density(input_isometry @ qubit), waveform)
        projected = output_isometry.conj().T @ rho @ output_isometry
        outputs[label] = projected
        leakage.append(1.0 - float(np.real(np.trace(projected))))
    measured = ptm_from_outputs(outputs)
    ideal = ptm_from_unitary(ideal_unitary)
    return LogicalChannel(
        ptm=measured,
        ideal=ideal,
        leakage=float(np.mean(leakage)),
        average_fidelity=leaky_average_fidelity(measured, ideal),
    )


def simulated_gate_fidelity(
    waveform: ControlWaveform,
    gate: Gate | str,
    basis: LogicalBasis,
    decoherence: DecoherenceSpec,
    model: HamiltonianModel,
    **integrator_options,
) -> LogicalChannel:
    """
    Simulate a logical gate pulse and return its channel, average fidelity and leakage.

    Inputs and outputs both live in the cat code space of ``basis``.
    """
    dims = basis.dims
    integrator = LindbladIntegrator(build_static_hamiltonian(model, dims), dims, decoherence, **integrator_options)
    isometry = basis.isometry()
    return simulate_logical_channel(waveform, integrator, isometry, isometry, Gate.from_string(gate).unitary())


def transmon_isometry(dims: HilbertDims) -> np.ndarray:
    """Return the isometry onto ``|g,0>`` and ``|e,0>``."""
    isometry = np.zeros((dims.joint, 2), dtype=complex)
    isometry[dims.index(0, 0), 0] = 1.0
    isometry[dims.index(0, 1), 1] = 1.0
    return isometry


def simulated_transfer_fidelity(
    waveform: ControlWaveform,
    transfers: StateTransferSet,
    integrator: LindbladIntegrator,
) -> float:
    """Return the mean of ``<psi_f|rho(T)|psi_f>`` over the transfers."""
    values = [
        state_fidelity(integrator.evolve(pure_density(initial), waveform), target)
        for initial, target in transfers.pairs()
    ]
    return float(np.mean(values))


def dephasing_sensitivity(
    waveform: ControlWaveform,
    gate: Gate | str,
    basis: LogicalBasis,
    model: HamiltonianModel,
    **integrator_options,
) -> Mapping[str, float]:
    """
    Return the gate infidelity with every decoherence rate present and with each removed in turn.

    Keys are ``"all"`` and the entries of ``RATE_NAMES``.
    """
    full = DecoherenceSpec.from_model(model)
    results = {"all": simulated_gate_fidelity(waveform, gate, basis, full, model, **integrator_options).infidelity}
    for name in RATE_NAMES:
        reduced = full.without(name)
        results[name] = simulated_gate_fidelity(waveform, gate, basis, reduced, model, **integrator_options).infidelity
    return results
