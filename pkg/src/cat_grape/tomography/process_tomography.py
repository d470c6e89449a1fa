"""
Single-qubit process tomography in the Pauli transfer representation.

The channel is probed with the six cardinal states. Output Bloch vectors are
obtained from exact expectation values, or from binomial samples when a shot
count is given, and the transfer matrix follows from an overdetermined linear
inversion.
"""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np

from cat_grape.errors import NonPhysicalChannelError
from cat_grape.tomography.pauli_transfer_matrix import PAULIS, PauliTransferMatrix

CARDINAL_STATES = {
    "+Z": np.array([1.0, 0.0], dtype=complex),
    "-Z": np.array([0.0, 1.0], dtype=complex),
    "+X": np.array([1.0, 1.0], dtype=complex) / math.sqrt(2),
    "-X": np.array([1.0, -1.0], dtype=complex) / math.sqrt(2),
    "+Y": np.array([1.0, 1j], dtype=complex) / math.sqrt(2),
    "-Y": np.array([1.0, -1j], dtype=complex) / math.sqrt(2),
}
PHYSICALITY_TOLERANCE = 1e-6


def bloch_coordinates(rho: np.ndarray) -> np.ndarray:
    """Return ``(Tr rho, <X>, <Y>, <Z>)``."""
    return np.real(np.einsum("aij,ji->a", PAULIS, rho))


def sampled_expectations(
    expectations: np.ndarray,
    shots: int,
    rng: np.random.Generator,
) -> np.ndarray:
    """Replace Pauli expectations by estimates from ``shots`` binomial draws each."""
    if shots < 1:
        raise ValueError("shots must be at least 1.")
    probabilities = np.clip((1.0 + np.asarray(expectations)) / 2.0, 0.0, 1.0)
    return 2.0 * rng.binomial(shots, probabilities) / shots - 1.0


def _check_output(label: str, rho: np.ndarray) -> None:
    if rho.shape != (2, 2):
        raise NonPhysicalChannelError(f"Output for {label} has shape {rho.shape}, expected (2, 2).")
    if np.max(np.abs(rho - rho.conj().T)) > PHYSICALITY_TOLERANCE:
        raise NonPhysicalChannelError(f"Output for {label} is not Hermitian.")
    if abs(np.trace(rho).real - 1.0) > PHYSICALITY_TOLERANCE:
        raise NonPhysicalChannelError(f"Output for {label} has trace {np.trace(rho).real:.9f}.")
    if np.min(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))) < -PHYSICALITY_TOLERANCE:
        raise NonPhysicalChannelError(f"Output for {label} has a negative eigenvalue.")


def process_tomography(
    evaluator: Callable[[np.ndarray], np.ndarray],
    *,
    shots: int | None = None,
    rng: np.random.Generator | None = None,
) -> PauliTransferMatrix:
    """
    Reconstruct the transfer matrix of a qubit channel.

    Args:
        evaluator: Maps an input 2x2 density matrix to the output 2x2 density matrix.
        shots: Optional number of projective measurements per Pauli expectation.
        rng: Seeded generator, required when ``shots`` is given.

    Raises:
        ValueError: if ``shots`` is given without ``rng``.
        NonPhysicalChannelError: if any output is not a valid density matrix.
    """
    if shots is not None and rng is None:
        raise ValueError("Sampled tomography needs a seeded generator; pass rng with shots.")
    inputs = []
    outputs = []
    for label, state in CARDINAL_STATES.items():
        rho_in = np.outer(state, state.conj())
        rho_out = np.asarray(evaluator(rho_in), dtype=complex)
        _check_output(label, rho_out)
        coordinates = bloch_coordinates(rho_out)
        if shots is not None:
            coordinates[1:] = sampled_expectations(coordinates[1:], shots, rng)
        inputs.append(bloch_coordinates(rho_in))
        outputs.append(coordinates)
    # R S = O over the six inputs, solved in the least-squares sense.
    solution, *_ = np.linalg.lstsq(np.array(inputs), np.array(outputs), rcond=None)
    return PauliTransferMatrix(np.clip(solution.T, -1.0, 1.0))
