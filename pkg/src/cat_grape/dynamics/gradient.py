"""
Analytic gradient of the coherent transfer fidelity.

With ``v = (1/M) sum_m <psi_f|U_N ... U_1|psi_i>`` and ``F = |v|^2``, the
derivative with respect to sample ``i`` of step ``k`` is
``2 Re(conj(v) dv)`` where ``dv`` sandwiches ``dU_k`` between the cached
backward and forward states.

Three ways of obtaining ``dU_k`` are offered:

* ``EXACT`` evaluates the derivative of the matrix exponential in the step
  eigenbasis with divided differences of the exponentiated eigenvalues.
* ``AUGMENTED`` exponentiates the block matrix ``[[A, B], [0, A]]`` with
  ``A = -i dt H`` and ``B = -i dt D_i`` and reads the upper-right block.
* ``FIRST_ORDER`` uses ``dU_k ~ -i dt D_i U_k``, which is approximate and
  intended for speed comparisons only.
"""

from __future__ import annotations

from enum import StrEnum

import numpy as np
import scipy.linalg

from cat_grape.dynamics.control_waveform import ControlWaveform
from cat_grape.dynamics.propagation import PropagationCache, step_hamiltonians
from cat_grape.errors import DimensionMismatchError
from cat_grape.operators import HilbertDims, build_drive_operators, drive_hamiltonian

DIVIDED_DIFFERENCE_CUTOFF = 1e-10


class GradientMethod(StrEnum):
    """How propagator derivatives are evaluated."""

    EXACT = "exact"
    AUGMENTED = "augmented"
    FIRST_ORDER = "first-order"

    @classmethod
    def from_string(cls, value: str | GradientMethod) -> GradientMethod:
        """
        Parse a method name, ignoring case and ``_``/``-`` differences.

        Raises:
            ValueError: if the supplied value is not a known method.
        """
        if isinstance(value, cls):
            return value
        normalised = str(value).strip().lower().replace("_", "-")
        for method in cls:
            if normalised == method.value:
                return method
        raise ValueError(f"Unrecognised gradient method value: {value!r}")


def _divided_differences(exponents: np.ndarray) -> np.ndarray:
    """Return ``(e^{a_j} - e^{a_k}) / (a_j - a_k)`` with the diagonal limit ``e^{a_j}``."""
    delta = exponents[..., :, None] - exponents[..., None, :]
    small = np.abs(delta) < DIVIDED_DIFFERENCE_CUTOFF
    safe = np.where(small, 1.0, delta)
    ratio = np.where(small, 1.0 + 0.5 * delta, np.expm1(delta) / safe)
    return np.exp(exponents)[..., None, :] * ratio


def propagator_derivative(
    H0: np.ndarray,
    sample: np.ndarray,
    dt: float,
    direction: int,
    dims: HilbertDims,
    *,
    method: GradientMethod = GradientMethod.AUGMENTED,
) -> np.ndarray:
    """
    Return the derivative of one step propagator with respect to one control sample.

    Args:
        H0: Static Hamiltonian on ``dims``.
        sample: The four control values of the step.
        dt: Step length in ns.
        direction: Index ``0..3`` of the differentiated drive quadrature.
        dims: Truncation of the joint space.
        method: Evaluation method; the block exponential by default.

    Returns:
        ``dU/d sample[direction]`` as a ``(d, d)`` complex matrix.
    """
    if not 0 <= direction < 4:
        raise ValueError(f"direction must be in 0..3, got {direction}.")
    if H0.shape != (dims.joint, dims.joint):
        raise DimensionMismatchError(f"Hamiltonian of shape {H0.shape} does not match {dims}.")
    drives = np.asarray(build_drive_operators(dims))
    H = H0 + drive_hamiltonian(drives, sample)
    generator = drives[direction]
    method = GradientMethod.from_string(method)

    if method is GradientMethod.AUGMENTED:
        d = dims.joint
        block = np.zeros((2 * d, 2 * d), dtype=complex)
        block[:d, :d] = -1j * dt * H
        block[d:, d:] = -1j * dt * H
        block[:d, d:] = -1j * dt * generator
        return scipy.linalg.expm(block)[:d, d:]

    eigenvalues, eigenvectors = np.linalg.eigh(H)
    if method is GradientMethod.FIRST_ORDER:
        U = (eigenvectors * np.exp(-1j * dt * eigenvalues)) @ eigenvectors.conj().T
        return -1j * dt * generator @ U
    phi = _divided_differences(-1j * dt * eigenvalues)
    rotated = eigenvectors.conj().T @ generator @ eigenvectors
    return eigenvectors @ (phi * (-1j * dt) * rotated) @ eigenvectors.conj().T


def overlap_gradient(
    cache: PropagationCache,
    drives: np.ndarray,
    *,
    method: GradientMethod = GradientMethod.EXACT,
    H0: np.ndarray | None = None,
    waveform: ControlWaveform | None = None,
) -> np.ndarray:
    """Return ``dv/d sample`` as an ``(N, 4)`` complex array."""
    method = GradientMethod.from_string(method)
    steps, transfers = cache.steps, cache.transfers
    backward = cache.backward[1:]
    forward_before = cache.forward[:-1]
    scale = 1.0 / transfers

    if method is GradientMethod.FIRST_ORDER:
        forward_after = cache.forward[1:]
        applied = np.einsum("ipq,kmq->kimp", drives, forward_after)
        return -1j * cache.dt * scale * np.einsum("kmp,kimp->ki", backward.conj(), applied)

    if method is GradientMethod.AUGMENTED:
        if H0 is None or waveform is None:
            raise ValueError("The augmented method needs H0 and the waveform.")
        d = drives.shape[-1]
        hamiltonians = step_hamiltonians(H0, waveform.samples, drives)
        result = np.empty((steps, 4), dtype=complex)
        block = np.zeros((2 * d, 2 * d), dtype=complex)
        for k in range(steps):
            block[:d, :d] = -1j * cache.dt * hamiltonians[k]
            block[d:, d:] = block[:d, :d]
            for i in range(4):
                block[:d, d:] = -1j * cache.dt * drives[i]
                derivative = scipy.linalg.expm(block)[:d, d:]
                result[k, i] = scale * np.sum(backward[k].conj() * (forward_before[k] @ derivative.T))
        return result

    vectors = cache.eigenvectors
    phi = _divided_differences(-1j * cache.dt * cache.eigenvalues)
    backward_eig = backward @ vectors.conj()
    forward_eig = forward_before @ vectors.conj()
    weights = (np.swapaxes(backward_eig.conj(), -1, -2) @ forward_eig) * phi
    # sum_pq D_pq (conj(V) W V^T)_pq equals sum_jl (V^dag D V)_jl W_jl.
    folded = vectors.conj() @ weights @ np.swapaxes(vectors, -1, -2)
    return -1j * cache.dt * scale * np.einsum("ipq,kpq->ki", drives, folded)


def fidelity_gradient(
    cache: PropagationCache,
    H0: np.ndarray,
    waveform: ControlWaveform,
    *,
    drives: np.ndarray | None = None,
    dims: HilbertDims | None = None,
    method: GradientMethod = GradientMethod.EXACT,
) -> np.ndarray:
    """
    Return ``dF/d sample`` for every step and quadrature, shape ``(N, 4)``.

    Either ``drives`` or ``dims`` must be supplied so the drive operators are known.
    """
    if drives is None:
        if dims is None:
            raise ValueError("Provide either the drive operators or the Hilbert dimensions.")
        drives = np.asarray(build_drive_operators(dims))
    if waveform.steps != cache.steps:
        raise DimensionMismatchError(f"Waveform has {waveform.steps} steps but the cache holds {cache.steps}.")
    dv = overlap_gradient(cache, drives, method=method, H0=H0, waveform=waveform)
    return 2.0 * np.real(np.conj(cache.overlap) * dv)
