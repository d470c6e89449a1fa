"""
Density-matrix reconstruction from Wigner samples.

The Wigner function is linear in the density matrix, so a Hermitian ``rho`` on
``n_max`` Fock levels is fitted to the samples by ridge-regularised least
squares over its ``n_max^2`` real parameters. The fit is then projected onto
the positive-semidefinite, unit-trace cone by clipping its spectrum onto the
probability simplex. This is a substitute for iterative maximum likelihood,
which would also model measurement imperfections.
"""

from __future__ import annotations

import numpy as np

from cat_grape.errors import ReconstructionError
from cat_grape.tomography.wigner import WignerGrid, fock_wigner_kernels

DEFAULT_RIDGE = 1e-10


def project_to_simplex(values: np.ndarray) -> np.ndarray:
    """Euclidean projection of a real vector onto ``{x >= 0, sum x = 1}``."""
    ordered = np.sort(values)[::-1]
    cumulative = np.cumsum(ordered) - 1.0
    ranks = np.arange(1, values.size + 1)
    last = np.nonzero(ordered - cumulative / ranks > 0)[0][-1]
    shift = cumulative[last] / (last + 1)
    return np.maximum(values - shift, 0.0)


def project_to_density_matrix(matrix: np.ndarray) -> np.ndarray:
    """Closest density matrix in Frobenius norm to a Hermitian matrix."""
    hermitian = 0.5 * (matrix + matrix.conj().T)
    eigenvalues, eigenvectors = np.linalg.eigh(hermitian)
    return (eigenvectors * project_to_simplex(eigenvalues)) @ eigenvectors.conj().T


def _design_matrix(betas: np.ndarray, n_max: int) -> np.ndarray:
    kernels = fock_wigner_kernels(betas, n_max)
    columns = [kernels[:, k, k].real for k in range(n_max)]
    for k in range(n_max):
        for m in range(k + 1, n_max):
            # rho_km X_mk + rho_mk X_km = 2 Re(rho_km X_mk) with rho_km = u + i v.
            columns.append(2.0 * kernels[:, m, k].real)
            columns.append(-2.0 * kernels[:, m, k].imag)
    return np.column_stack(columns)


def _assemble(parameters: np.ndarray, n_max: int) -> np.ndarray:
    rho = np.diag(parameters[:n_max]).astype(complex)
    cursor = n_max
    for k in range(n_max):
        for m in range(k + 1, n_max):
            rho[k, m] = parameters[cursor] + 1j * parameters[cursor + 1]
            rho[m, k] = np.conj(rho[k, m])
            cursor += 2
    return rho


def reconstruct_from_wigner(grid: WignerGrid, n_max: int, *, ridge: float = DEFAULT_RIDGE) -> np.ndarray:
    """
    Return the density matrix on ``n_max`` levels that best reproduces the grid.

    Untrusted points are excluded from the fit.

    Raises:
        ReconstructionError: if fewer than ``n_max^2`` usable points are available.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1.")
    required = n_max**2
    usable = ~grid.untrusted.reshape(-1) & np.isfinite(grid.values.reshape(-1))
    if int(usable.sum()) < required:
        raise ReconstructionError(
            f"Reconstruction on {n_max} levels needs at least {required} trusted Wigner points, "
            f"got {int(usable.sum())}.",
            required_points=required,
        )
    design = _design_matrix(grid.betas.reshape(-1)[usable], n_max)
    samples = grid.values.reshape(-1)[usable]
    normal = design.T @ design + ridge * np.eye(required)
    parameters = np.linalg.solve(normal, design.T @ samples)
    return project_to_density_matrix(_assemble(parameters, n_max))
