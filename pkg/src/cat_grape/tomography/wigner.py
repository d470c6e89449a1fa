"""
Wigner functions of the oscillator by displaced parity.

``W(beta) = (2/pi) Tr[D(beta)+ rho D(beta) P]`` with ``P`` the photon-number
parity. The state is embedded in a larger working truncation before
displacement; points whose displaced state reaches the top of that truncation
are flagged as untrusted. A Fock-space series over Laguerre polynomials gives
an independent evaluation of the same quantity.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import eval_genlaguerre, gammaln

from cat_grape.errors import DimensionMismatchError
from cat_grape.operators import HilbertDims, annihilation

logger = logging.getLogger(__name__)

WIGNER_BOUND = 2 / math.pi
UNTRUSTED_POPULATION = 1e-8
TOP_LEVELS_CHECKED = 4


@dataclass(frozen=True, eq=False)
class WignerGrid:
    """
    Wigner values on a set of phase-space points.

    ``betas``, ``values`` and ``untrusted`` share one shape; for a square lattice
    built by :func:`square_lattice` rows run along ``Im beta``.
    """

    betas: np.ndarray
    values: np.ndarray
    untrusted: np.ndarray

    def __post_init__(self) -> None:
        """Require matching shapes."""
        if not (self.betas.shape == self.values.shape == self.untrusted.shape):
            raise ValueError("betas, values and untrusted flags must share one shape.")

    @property
    def trusted_fraction(self) -> float:
        return float(1.0 - np.mean(self.untrusted))

    def integral(self) -> float:
        """Riemann sum of ``W d^2 beta`` over a uniform square lattice."""
        if self.betas.ndim != 2 or min(self.betas.shape) < 2:
            raise ValueError("integral() needs a two-dimensional lattice.")
        dx = float(self.betas[0, 1].real - self.betas[0, 0].real)
        dy = float(self.betas[1, 0].imag - self.betas[0, 0].imag)
        return float(np.sum(self.values) * dx * dy)

    def rows(self) -> list[tuple[float, float, float, bool]]:
        """Flattened ``(Re beta, Im beta, W, untrusted)`` tuples."""
        return [
            (float(beta.real), float(beta.imag), float(value), bool(flag))
            for beta, value, flag in zip(
                self.betas.reshape(-1), self.values.reshape(-1), self.untrusted.reshape(-1), strict=True
            )
        ]


def square_lattice(extent: float, points: int) -> np.ndarray:
    """Return ``points x points`` values of ``beta`` covering ``[-extent, extent]^2``."""
    if extent <= 0 or points < 1:
        raise ValueError("extent must be positive and points at least 1.")
    axis = np.linspace(-extent, extent, points)
    return axis[None, :] + 1j * axis[:, None]


@lru_cache(maxsize=16)
def _quadrature_eigensystem(n: int) -> tuple[np.ndarray, np.ndarray]:
    a = annihilation(n)
    # i(a+ - a) is Hermitian; D(r) = exp(r (a+ - a)) = V exp(-i r w) V+.
    return np.linalg.eigh(1j * (a.conj().T - a))


def displacement(beta: complex, n_osc: int) -> np.ndarray:
    """
    Return ``exp(beta a+ - beta* a)`` in a truncation of ``n_osc`` levels.

    The generator is truncated before exponentiation, so the result is exactly
    unitary and ``D(beta) D(-beta) = I``.
    """
    eigenvalues, eigenvectors = _quadrature_eigensystem(n_osc)
    radius, angle = abs(beta), np.angle(beta)
    phases = np.exp(1j * angle * np.arange(n_osc))
    core = (eigenvectors * np.exp(-1j * radius * eigenvalues)) @ eigenvectors.conj().T
    return phases[:, None] * core * phases.conj()[None, :]


def coherent_state(beta: complex, n_osc: int) -> np.ndarray:
    """Return the truncated coherent state ``|beta>`` built from its Poisson amplitudes."""
    levels = np.arange(n_osc)
    if beta == 0:
        state = np.zeros(n_osc, dtype=complex)
        state[0] = 1.0
        return state
    amplitudes = np.exp(-0.5 * abs(beta) ** 2 + levels * np.log(complex(beta)) - 0.5 * gammaln(levels + 1))
    return amplitudes / np.linalg.norm(amplitudes)


def reduce_to_oscillator(state: np.ndarray, dims: HilbertDims) -> np.ndarray:
    """Trace out the transmon from a joint state vector or density matrix."""
    state = np.asarray(state, dtype=complex)
    if state.shape == (dims.joint,):
        state = np.outer(state, state.conj())
    if state.shape != (dims.joint, dims.joint):
        raise DimensionMismatchError(f"State of shape {state.shape} does not match {dims}.")
    return np.einsum("iaja->ij", state.reshape(dims.n_osc, dims.n_trans, dims.n_osc, dims.n_trans))


def _oscillator_density(state: np.ndarray, dims: HilbertDims | None) -> np.ndarray:
    state = np.asarray(state, dtype=complex)
    if dims is not None:
        return reduce_to_oscillator(state, dims)
    if state.ndim == 1:
        return np.outer(state, state.conj())
    return state


def working_levels(n_state: int, max_radius: float) -> int:
    """Truncation large enough to displace an ``n_state``-level state by ``max_radius``."""
    reach = max_radius + math.sqrt(n_state)
    return max(n_state + TOP_LEVELS_CHECKED, int(math.ceil(reach**2 + 6 * reach + 10)))


def wigner(
    state: np.ndarray,
    betas: np.ndarray,
    *,
    dims: HilbertDims | None = None,
    levels: int | None = None,
) -> WignerGrid:
    """
    Evaluate the Wigner function by displaced parity.

    Args:
        state: Oscillator vector or density matrix, or a joint one when ``dims`` is given.
        betas: Phase-space points, any shape.
        dims: Joint truncation; the transmon is traced out first when supplied.
        levels: Working truncation; chosen from the largest ``|beta|`` when omitted.
    """
    rho = _oscillator_density(state, dims)
    betas = np.asarray(betas, dtype=complex)
    n_state = rho.shape[0]
    n_work = levels or working_levels(n_state, float(np.max(np.abs(betas), initial=0.0)))
    if n_work < n_state:
        raise ValueError(f"Working truncation {n_work} is smaller than the state dimension {n_state}.")
    padded = np.zeros((n_work, n_work), dtype=complex)
    padded[:n_state, :n_state] = rho
    parity = (-1.0) ** np.arange(n_work)

    values = np.empty(betas.shape)
    untrusted = np.zeros(betas.shape, dtype=bool)
    for index, beta in np.ndenumerate(betas):
        D = displacement(beta, n_work)
        displaced = D.conj().T @ padded @ D
        populations = np.real(np.diag(displaced))
        values[index] = WIGNER_BOUND * float(np.sum(parity * populations))
        untrusted[index] = float(np.sum(populations[-TOP_LEVELS_CHECKED:])) > UNTRUSTED_POPULATION
    if untrusted.any():
        logger.warning("%d of %d Wigner points exceed the working truncation.", int(untrusted.sum()), untrusted.size)
    return WignerGrid(betas=betas, values=values, untrusted=untrusted)


def fock_wigner_kernels(betas: np.ndarray, n: int) -> np.ndarray:
    """
    Return ``X[p, m, k] = (2/pi) <m| D(beta_p) P D(beta_p)+ |k>`` for flattened points.

    ``W(beta) = sum_mk rho_km X[m, k]``.
    """
    betas = np.asarray(betas, dtype=complex).reshape(-1)
    radius_sq = 4.0 * np.abs(betas) ** 2
    envelope = np.exp(-0.5 * radius_sq)
    kernels = np.zeros((betas.size, n, n), dtype=complex)
    for m in range(n):
        for k in range(m + 1):
            # <m|D(2 beta)|k> for m >= k, times the parity sign of |k>.
            shift = m - k
            norm = math.exp(0.5 * (gammaln(k + 1) - gammaln(m + 1)))
            element = norm * (2.0 * betas) ** shift * envelope * eval_genlaguerre(k, shift, radius_sq)
            kernels[:, m, k] = (-1.0) ** k * element
            if m != k:
                kernels[:, k, m] = np.conj(kernels[:, m, k])
    return WIGNER_BOUND * kernels


def wigner_series(state: np.ndarray, betas: np.ndarray, *, dims: HilbertDims | None = None) -> np.ndarray:
    """Evaluate the Wigner function from Fock matrix elements and Laguerre polynomials."""
    rho = _oscillator_density(state, dims)
    betas = np.asarray(betas, dtype=complex)
    kernels = fock_wigner_kernels(betas, rho.shape[0])
    return np.real(np.einsum("km,pmk->p", rho, kernels)).reshape(betas.shape)
