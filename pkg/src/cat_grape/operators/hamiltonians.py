"""
Static and drive Hamiltonians in the doubly rotating frame.

The static part is diagonal in the joint Fock basis. Drive amplitudes enter
through four Hermitian quadrature operators so a control sample of four real
numbers maps linearly onto the drive Hamiltonian.
"""

from __future__ import annotations

import numpy as np

from cat_grape.errors import InvalidControlError
from cat_grape.operators.hamiltonian_model import HamiltonianModel
from cat_grape.operators.hilbert_dims import HilbertDims
from cat_grape.operators.ladder import oscillator_annihilation, transmon_annihilation

DRIVE_LABELS = ("re_eps_c", "im_eps_c", "re_eps_t", "im_eps_t")


def build_static_hamiltonian(model: HamiltonianModel, dims: HilbertDims) -> np.ndarray:
    """
    Return the rotating-frame static Hamiltonian.

    ``H0 = chi n_a n_b + K/2 a+^2 a^2 + anh/2 b+^2 b^2 + chi'/2 n_b a+^2 a^2``,
    evaluated directly on the diagonal.
    """
    n = np.arange(dims.n_osc, dtype=float)[:, None]
    m = np.arange(dims.n_trans, dtype=float)[None, :]
    pairs_osc = n * (n - 1)
    energies = (
        model.chi * n * m
        + 0.5 * model.kerr * pairs_osc
        + 0.5 * model.anh * m * (m - 1)
        + 0.5 * model.chi_prime * m * pairs_osc
    )
    return np.diag(energies.reshape(-1)).astype(complex)


def build_drive_operators(dims: HilbertDims) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Return ``(X_C, Y_C, X_T, Y_T)`` in the order of a control sample."""
    a = oscillator_annihilation(dims)
    b = transmon_annihilation(dims)
    a_dag = a.conj().T
    b_dag = b.conj().T
    return a + a_dag, 1j * (a - a_dag), b + b_dag, 1j * (b - b_dag)


def drive_hamiltonian(drives: tuple[np.ndarray, ...] | np.ndarray, sample: np.ndarray) -> np.ndarray:
    """Combine stacked drive operators with one four-component control sample."""
    sample = np.asarray(sample, dtype=float)
    if sample.shape != (4,):
        raise InvalidControlError(f"Control sample must have four components, got shape {sample.shape}.")
    if not np.all(np.isfinite(sample)):
        raise InvalidControlError(f"Control sample contains non-finite values: {sample.tolist()}.")
    return np.tensordot(sample, np.asarray(drives), axes=1)
