"""Checks and constructors for density matrices."""

from __future__ import annotations

import numpy as np
import scipy.linalg

HERMITICITY_TOLERANCE = 1e-10
TRACE_TOLERANCE = 1e-9
POSITIVITY_TOLERANCE = 1e-9


def pure_density(state: np.ndarray) -> np.ndarray:
    """Return ``|psi><psi|``."""
    state = np.asarray(state, dtype=complex)
    return np.outer(state, state.conj())


def check_density_matrix(
    rho: np.ndarray,
    *,
    hermiticity: float = HERMITICITY_TOLERANCE,
    trace: float = TRACE_TOLERANCE,
    positivity: float = POSITIVITY_TOLERANCE,
) -> None:
    """
    Validate a density matrix.

    Raises:
        ValueError: if ``rho`` is not square, not Hermitian, not unit trace or
            has an eigenvalue below ``-positivity``.
    """
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"A density matrix must be square, got shape {rho.shape}.")
    if np.max(np.abs(rho - rho.conj().T)) > hermiticity:
        raise ValueError("Density matrix is not Hermitian.")
    if abs(np.trace(rho).real - 1.0) > trace:
        raise ValueError(f"Density matrix trace {np.trace(rho).real!r} differs from 1.")
    if np.min(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))) < -positivity:
        raise ValueError("Density matrix has a negative eigenvalue.")


def state_fidelity(rho: np.ndarray, target: np.ndarray) -> float:
    """
    Return the fidelity of ``rho`` with a target state.

    A target vector gives ``<psi|rho|psi>``; a target matrix gives the Uhlmann
    fidelity ``(Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2``.
    """
    target = np.asarray(target, dtype=complex)
    if target.ndim == 1:
        return float(np.real(target.conj() @ rho @ target))
    root = scipy.linalg.sqrtm(rho)
    return float(np.real(np.trace(scipy.linalg.sqrtm(root @ target @ root))) ** 2)
