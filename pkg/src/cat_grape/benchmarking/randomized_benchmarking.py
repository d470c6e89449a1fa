"""
Standard and interleaved randomized benchmarking of the simulated logical qubit.

Two simulation modes are offered. ``run_rb`` composes per-gate transfer
matrices and draws one Bernoulli outcome per fresh random sequence.
``run_lindblad_rb`` evolves the full oscillator-transmon density matrix
through every pulse of each sequence, bracketed by the encoding and decoding
pulses, and reads the transmon ground-state population exactly.

Each sequence length draws from its own random substream, keyed by the seed
and the length's position, so lengths can be simulated independently.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from cat_grape.benchmarking.channel_set import GateChannelSet
from cat_grape.benchmarking.decay_fit import FitResult, fit_decay
from cat_grape.benchmarking.sequences import RBSequence, default_group, rng_stream, sample_sequence
from cat_grape.catcode import Gate
from cat_grape.dynamics import ControlWaveform
from cat_grape.lindblad import LindbladIntegrator, pure_density
from cat_grape.operators import basis_state
from cat_grape.tomography import PauliTransferMatrix

logger = logging.getLogger(__name__)

DEFAULT_LENGTHS = (1, 2, 4, 8, 12, 16, 24, 32)
DEFAULT_SHOTS = 2000
DEFAULT_LINDBLAD_LENGTHS = (1, 2, 4, 8, 12, 16)
DEFAULT_LINDBLAD_SEQUENCES = 8
# Bloch vector (Tr, X, Y, Z) of the +Z start and target state.
_PLUS_Z = np.array([1.0, 0.0, 0.0, 1.0])


@dataclass(frozen=True, eq=False)
class RBResult:
    """
    Success probabilities per sequence length.

    Attributes:
        lengths: Sequence lengths, excluding interleaved and correction gates.
        probabilities: Mean success probability per length.
        stderr: Standard error per length.
        shots: Shots per length (PTM mode) or per sequence (master-equation mode, ``None`` when exact).
        sequences: Random sequences drawn per length.
        interleave: Interleaved gate, if any.
    """

    lengths: tuple[int, ...]
    probabilities: np.ndarray
    stderr: np.ndarray
    shots: int | None
    sequences: int
    interleave: Gate | None = None

    def __post_init__(self) -> None:
        """Require one probability in ``[0, 1]`` per length."""
        if len(self.lengths) != len(self.probabilities) or len(self.lengths) != len(self.stderr):
            raise ValueError("lengths, probabilities and stderr must have equal length.")
        if np.any(self.probabilities < 0) or np.any(self.probabilities > 1):
            raise ValueError("Success probabilities must lie in [0, 1].")

    def fit(self) -> FitResult:
        return fit_decay(np.array(self.lengths), self.probabilities)

    def rows(self) -> list[tuple[int, float, float]]:
        return [
            (length, float(probability), float(error))
            for length, probability, error in zip(self.lengths, self.probabilities, self.stderr, strict=True)
        ]


def _check_lengths(lengths: Sequence[int]) -> tuple[int, ...]:
    lengths = tuple(int(length) for length in lengths)
    if not lengths or min(lengths) < 1:
        raise ValueError("Sequence lengths must be positive and non-empty.")
    return lengths


def _final_bloch(
    sequence: RBSequence, matrices: dict[Gate, np.ndarray], interleave_matrix: np.ndarray | None = None
) -> np.ndarray:
    vector = _PLUS_Z
    for gate, interleaved in sequence.slots():
        matrix = interleave_matrix if interleaved and interleave_matrix is not None else matrices[gate]
        vector = matrix @ vector
    return vector


def run_rb(
    channels: GateChannelSet,
    lengths: Sequence[int] = DEFAULT_LENGTHS,
    shots: int = DEFAULT_SHOTS,
    *,
    seed: int = 0,
    interleave: Gate | str | None = None,
    interleave_channel: PauliTransferMatrix | None = None,
) -> RBResult:
    """
    Benchmark a set of gate channels at the transfer-matrix level.

    Every shot draws a fresh sequence, composes the channels and samples the
    outcome ``+Z`` with probability ``(1 + <Z>) / 2``.

    Args:
        channels: Trace-preserving channel for every generator gate.
        lengths: Sequence lengths.
        shots: Sequences (and single-shot outcomes) per length.
        seed: Root of the per-length random substreams.
        interleave: Gate inserted after every random gate.
        interleave_channel: Channel used in the interleaved slots instead of the gate's entry in
            ``channels``. Random draws of the same gate still use ``channels``.
    """
    lengths = _check_lengths(lengths)
    if shots < 1:
        raise ValueError("shots must be at least 1.")
    group = default_group()
    channels.require_channels(group.generators)
    matrices = {gate: channel.matrix for gate, channel in channels.channels.items()}
    interleaved = Gate.from_string(interleave) if interleave is not None else None
    interleave_matrix = None
    if interleaved is not None:
        interleave_matrix = (interleave_channel or channels.channel(interleaved)).matrix

    probabilities = np.empty(len(lengths))
    for position, length in enumerate(lengths):
        rng = rng_stream(seed, position)
        successes = 0
        for _ in range(shots):
            sequence = sample_sequence(length, rng, interleave=interleaved, group=group)
            z_final = _final_bloch(sequence, matrices, interleave_matrix)[3]
            successes += int(rng.random() < np.clip((1.0 + z_final) / 2.0, 0.0, 1.0))
        probabilities[position] = successes / shots
        logger.debug("length %d: success probability %.4f", length, probabilities[position])
    stderr = np.sqrt(probabilities * (1.0 - probabilities) / shots)
    return RBResult(lengths, probabilities, stderr, shots=shots, sequences=shots, interleave=interleaved)


def ground_population(rho: np.ndarray, integrator: LindbladIntegrator) -> float:
    """Population of the transmon ground state, oscillator traced out."""
    dims = integrator.dims
    diagonal = np.real(np.diag(rho)).reshape(dims.n_osc, dims.n_trans)
    return float(np.clip(diagonal[:, 0].sum(), 0.0, 1.0))


def run_lindblad_rb(
    gate_set: GateChannelSet,
    encode: ControlWaveform,
    decode: ControlWaveform,
    integrator: LindbladIntegrator,
    lengths: Sequence[int] = DEFAULT_LINDBLAD_LENGTHS,
    sequences: int = DEFAULT_LINDBLAD_SEQUENCES,
    *,
    seed: int = 0,
    shots: int | None = None,
    interleave: Gate | str | None = None,
) -> RBResult:
    """
    Benchmark synthesised pulses end to end under the master equation.

    Each sequence starts in ``|0, g>``, is encoded, driven through its gate
    pulses and correction, decoded, and scored by the transmon ground-state
    population. With ``shots`` the exact population is replaced by a binomial
    estimate.
    """
    lengths = _check_lengths(lengths)
    if sequences < 1:
        raise ValueError("sequences must be at least 1.")
    group = default_group()
    interleaved = Gate.from_string(interleave) if interleave is not None else None
    gate_set.require_waveforms((*group.generators, *((interleaved,) if interleaved is not None else ())))
    start = pure_density(basis_state(integrator.dims, 0, 0))

    probabilities = np.empty(len(lengths))
    stderr = np.empty(len(lengths))
    for position, length in enumerate(lengths):
        rng = rng_stream(seed, position)
        outcomes = np.empty(sequences)
        for index in range(sequences):
            sequence = sample_sequence(length, rng, interleave=interleaved, group=group)
            rho = integrator.evolve(start, encode)
            for gate in sequence.applied():
                rho = integrator.evolve(rho, gate_set.waveform(gate))
            population = ground_population(integrator.evolve(rho, decode), integrator)
            outcomes[index] = rng.binomial(shots, population) / shots if shots is not None else population
        probabilities[position] = float(np.mean(outcomes))
        stderr[position] = float(np.std(outcomes, ddof=1) / math.sqrt(sequences)) if sequences > 1 else 0.0
        logger.info("length %d: success probability %.5f", length, probabilities[position])
    return RBResult(lengths, probabilities, stderr, shots=shots, sequences=sequences, interleave=interleaved)
