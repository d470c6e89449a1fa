"""
Piecewise-constant propagation of pure states.

Each step Hamiltonian ``H0 + sum_i s_i D_i`` is Hermitian, so its propagator is
built from an eigendecomposition. The decompositions are kept in the cache
because the exact gradient is assembled in the same eigenbases.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from cat_grape.dynamics.control_waveform import ControlWaveform
from cat_grape.dynamics.state_transfer_set import StateTransferSet
from cat_grape.errors import DimensionMismatchError, InvalidControlError
from cat_grape.operators import HilbertDims, build_drive_operators, drive_hamiltonian


@dataclass(frozen=True, eq=False)
class PropagationCache:
    """
    Forward and backward states for every step boundary.

    ``forward[k]`` is ``U_k ... U_1 |psi_init>`` and ``backward[k]`` is
    ``U_{k+1}^dag ... U_N^dag |psi_final>``, each of shape ``(N + 1, M, d)``.
    ``eigenvalues`` and ``eigenvectors`` hold the decomposition of every step
    Hamiltonian.
    """

    dt: float
    forward: np.ndarray
    backward: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def steps(self) -> int:
        return self.eigenvalues.shape[0]

    @property
    def transfers(self) -> int:
        return self.forward.shape[1]

    @property
    def overlap(self) -> complex:
        """Mean coherent overlap ``(1/M) sum_m <psi_f|U|psi_i>``."""
        return complex(np.sum(self.backward[-1].conj() * self.forward[-1]) / self.transfers)

    def propagators(self) -> np.ndarray:
        """Return every step unitary, shape ``(N, d, d)``."""
        phases = np.exp(-1j * self.dt * self.eigenvalues)
        return np.einsum("kij,kj,klj->kil", self.eigenvectors, phases, self.eigenvectors.conj())


def step_hamiltonians(H0: np.ndarray, samples: np.ndarray, drives: np.ndarray) -> np.ndarray:
    """Return the total Hamiltonian of every step, shape ``(N, d, d)``."""
    samples = np.asarray(samples, dtype=float)
    if not np.all(np.isfinite(samples)):
        bad_steps = np.flatnonzero(~np.all(np.isfinite(samples), axis=-1)).tolist()
        raise InvalidControlError(f"Control samples contain non-finite values at steps {bad_steps}.")
    return H0[None, :, :] + np.einsum("ki,ipq->kpq", samples, drives)


def _check_operator(H0: np.ndarray, dims: HilbertDims) -> None:
    if H0.shape != (dims.joint, dims.joint):
        raise DimensionMismatchError(f"Hamiltonian of shape {H0.shape} does not match {dims}.")


def step_propagator(
    H0: np.ndarray,
    sample: np.ndarray,
    dt: float,
    dims: HilbertDims,
    *,
    drives: np.ndarray | None = None,
) -> np.ndarray:
    """
    Return ``exp(-i dt (H0 + H_drive(sample)))``.

    Raises:
        InvalidControlError: if the sample is not four finite numbers.
        DimensionMismatchError: if ``H0`` does not act on ``dims``.
    """
    _check_operator(H0, dims)
    drives = np.asarray(build_drive_operators(dims)) if drives is None else drives
    H = H0 + drive_hamiltonian(drives, sample)
    eigenvalues, eigenvectors = np.linalg.eigh(H)
    return (eigenvectors * np.exp(-1j * dt * eigenvalues)) @ eigenvectors.conj().T


def propagate(
    waveform: ControlWaveform,
    transfers: StateTransferSet,
    H0: np.ndarray,
    *,
    drives: np.ndarray | None = None,
) -> PropagationCache:
    """
    Propagate every initial state forward and every target backward.

    Raises:
        DimensionMismatchError: if ``H0`` and the transfer set disagree.
        InvalidControlError: if any sample is non-finite.
    """
    dims = transfers.dims
    _check_operator(H0, dims)
    drives = np.asarray(build_drive_operators(dims)) if drives is None else drives
    eigenvalues, eigenvectors = np.linalg.eigh(step_hamiltonians(H0, waveform.samples, drives))
    phases = np.exp(-1j * waveform.dt * eigenvalues)

    steps = waveform.steps
    forward = np.empty((steps + 1, transfers.size, dims.joint), dtype=complex)
    backward = np.empty_like(forward)
    forward[0] = transfers.initial
    backward[steps] = transfers.targets
    for k in range(steps):
        vectors = eigenvectors[k]
        forward[k + 1] = ((forward[k] @ vectors.conj()) * phases[k]) @ vectors.T
    for k in range(steps, 0, -1):
        vectors = eigenvectors[k - 1]
        backward[k - 1] = ((backward[k] @ vectors.conj()) * phases[k - 1].conj()) @ vectors.T
    return PropagationCache(
        dt=waveform.dt,
        forward=forward,
        backward=backward,
        eigenvalues=eigenvalues,
        eigenvectors=eigenvectors,
    )


def total_propagator(
    waveform: ControlWaveform,
    H0: np.ndarray,
    dims: HilbertDims,
    *,
    drives: np.ndarray | None = None,
) -> np.ndarray:
    """Return ``U_N ... U_1`` for the whole waveform."""
    _check_operator(H0, dims)
    drives = np.asarray(build_drive_operators(dims)) if drives is None else drives
    eigenvalues, eigenvectors = np.linalg.eigh(step_hamiltonians(H0, waveform.samples, drives))
    total = np.eye(dims.joint, dtype=complex)
    for k in range(waveform.steps):
        step = (eigenvectors[k] * np.exp(-1j * waveform.dt * eigenvalues[k])) @ eigenvectors[k].conj().T
        total = step @ total
    return total


def transfer_fidelity(cache: PropagationCache) -> float:
    """Return ``|(1/M) sum_m <psi_f|U|psi_i>|^2``, clipped into ``[0, 1]``."""
    return float(min(max(abs(cache.overlap) ** 2, 0.0), 1.0))
