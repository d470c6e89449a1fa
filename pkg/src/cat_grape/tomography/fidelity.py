"""
Average gate fidelities of qubit channels.
"""

from __future__ import annotations

from collections.abc import Callable

import numpy as np

from cat_grape.tomography.pauli_transfer_matrix import PauliTransferMatrix

# Literature values for annotating reports; never used as thresholds.
LITERATURE_ENCODE_DECODE_FIDELITY = 0.964
LITERATURE_NO_OP_FIDELITY = 0.982
DEFAULT_HAAR_SAMPLES = 2000


def average_fidelity(measured: PauliTransferMatrix, ideal: PauliTransferMatrix) -> float:
    """
    Return ``(Tr(R_ideal^T R_meas) / 2 + 1) / 3``.

    Raises:
        NonPhysicalChannelError: if either matrix is not trace preserving.
    """
    measured.require_trace_preserving()
    ideal.require_trace_preserving()
    return float((np.trace(ideal.matrix.T @ measured.matrix) / 2.0 + 1.0) / 3.0)


def delta_fidelity(
    full: PauliTransferMatrix,
    encode_decode: PauliTransferMatrix,
    ideal: PauliTransferMatrix,
) -> float:
    """
    Return the fidelity cost attributed to the gate alone.

    The gate is measured bracketed by encoding and decoding; the bracket alone is
    measured against the identity and the difference of the two average
    fidelities is reported.
    """
    return average_fidelity(full, ideal) - average_fidelity(encode_decode, PauliTransferMatrix.identity())


def haar_random_states(samples: int, rng: np.random.Generator) -> np.ndarray:
    """Return ``samples`` Haar-random pure qubit states as rows."""
    states = rng.normal(size=(samples, 2)) + 1j * rng.normal(size=(samples, 2))
    return states / np.linalg.norm(states, axis=1, keepdims=True)


def haar_average_fidelity(
    channel: Callable[[np.ndarray], np.ndarray],
    unitary: np.ndarray,
    *,
    samples: int = DEFAULT_HAAR_SAMPLES,
    rng: np.random.Generator,
) -> float:
    """Monte-Carlo estimate of ``E_psi <psi|U+ G(psi psi+) U|psi>`` over Haar-random inputs."""
    if samples < 1:
        raise ValueError("samples must be at least 1.")
    unitary = np.asarray(unitary, dtype=complex)
    total = 0.0
    for state in haar_random_states(samples, rng):
        output = channel(np.outer(state, state.conj()))
        expected = unitary @ state
        total += float(np.real(expected.conj() @ output @ expected))
    return total / samples
