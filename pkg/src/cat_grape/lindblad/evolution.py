"""
Open-system evolution under piecewise-constant controls.

The default integrator advances ``d rho/dt = -i[H, rho] + sum_j D[L_j] rho`` with
classical fourth-order Runge-Kutta in matrix form. Every control step is
integrated twice, with ``s`` and ``2s`` substeps; the step is accepted when the
two results agree within the tolerance, otherwise ``s`` doubles until the retry
budget is exhausted. A per-step exponential of the full superoperator is
available as a cross-check for small dimensions.
"""

from __future__ import annotations

import logging
from enum import StrEnum

import numpy as np
import scipy.linalg

from cat_grape.dynamics import ControlWaveform, step_hamiltonians
from cat_grape.errors import DimensionMismatchError, IntegrationError
from cat_grape.lindblad.decoherence import DecoherenceSpec
from cat_grape.operators import HilbertDims, build_drive_operators

logger = logging.getLogger(__name__)

DEFAULT_SUBSTEPS = 4
DEFAULT_STEP_TOLERANCE = 1e-10
DEFAULT_MAX_SUBSTEPS = 1024


class IntegratorMode(StrEnum):
    """Master-equation integration scheme."""

    RK4 = "rk4"
    SUPEROPERATOR = "superoperator"

    @classmethod
    def from_string(cls, value: str | IntegratorMode) -> IntegratorMode:
        """
        Parse a mode name, ignoring case.

        Raises:
            ValueError: if the supplied value is not a known mode.
        """
        if isinstance(value, cls):
            return value
        normalised = str(value).strip().lower()
        for mode in cls:
            if normalised == mode.value:
                return mode
        raise ValueError(f"Unrecognised integrator mode value: {value!r}")


class LindbladIntegrator:
    """
    Evolve density matrices through waveforms for one Hamiltonian and noise model.

    Operators are built once so the same integrator can be reused for every
    input state of a channel or every pulse of a benchmarking sequence.
    """

    def __init__(
        self,
        H0: np.ndarray,
        dims: HilbertDims,
        decoherence: DecoherenceSpec,
        *,
        mode: IntegratorMode | str = IntegratorMode.RK4,
        substeps: int = DEFAULT_SUBSTEPS,
        tolerance: float = DEFAULT_STEP_TOLERANCE,
        max_substeps: int = DEFAULT_MAX_SUBSTEPS,
    ) -> None:
        if H0.shape != (dims.joint, dims.joint):
            raise DimensionMismatchError(f"Hamiltonian of shape {H0.shape} does not match {dims}.")
        if substeps < 1 or max_substeps < substeps:
            raise ValueError("substeps must be at least 1 and not exceed max_substeps.")
        self._H0 = H0
        self._dims = dims
        self._mode = IntegratorMode.from_string(mode)
        self._substeps = substeps
        self._tolerance = tolerance
        self._max_substeps = max_substeps
        self._drives = np.asarray(build_drive_operators(dims))
        self._collapse = decoherence.collapse_operators(dims)
        self._collapse_dag = [operator.conj().T for operator in self._collapse]
        self._damping = sum(
            (dag @ operator for operator, dag in zip(self._collapse, self._collapse_dag, strict=True)),
            start=np.zeros_like(H0),
        )

    @property
    def dims(self) -> HilbertDims:
        return self._dims

    def evolve(self, rho0: np.ndarray, waveform: ControlWaveform) -> np.ndarray:
        """
        Return the density matrix at the end of ``waveform``.

        Raises:
            DimensionMismatchError: if ``rho0`` does not act on the joint space.
            IntegrationError: if a step cannot meet the tolerance within the substep budget.
        """
        rho = np.array(rho0, dtype=complex)
        if rho.shape != self._H0.shape:
            raise DimensionMismatchError(f"Density matrix of shape {rho.shape} does not match {self._dims}.")
        hamiltonians = step_hamiltonians(self._H0, waveform.samples, self._drives)
        if self._mode is IntegratorMode.SUPEROPERATOR:
            for H in hamiltonians:
                rho = self._superoperator_step(rho, H, waveform.dt)
        else:
            substeps = self._substeps
            for index, H in enumerate(hamiltonians):
                rho, substeps = self._adaptive_step(rho, H, waveform.dt, substeps, index)
        return 0.5 * (rho + rho.conj().T)

    def _generator(self, rho: np.ndarray, H_eff: np.ndarray) -> np.ndarray:
        result = -1j * (H_eff @ rho - rho @ H_eff.conj().T)
        for operator, dag in zip(self._collapse, self._collapse_dag, strict=True):
            result += operator @ rho @ dag
        return result

    def _rk4(self, rho: np.ndarray, H_eff: np.ndarray, dt: float, substeps: int) -> np.ndarray:
        h = dt / substeps
        for _ in range(substeps):
            k1 = self._generator(rho, H_eff)
            k2 = self._generator(rho + 0.5 * h * k1, H_eff)
            k3 = self._generator(rho + 0.5 * h * k2, H_eff)
            k4 = self._generator(rho + h * k3, H_eff)
            rho = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        return rho

    def _adaptive_step(
        self,
        rho: np.ndarray,
        H: np.ndarray,
        dt: float,
        substeps: int,
        index: int,
    ) -> tuple[np.ndarray, int]:
        H_eff = H - 0.5j * self._damping
        coarse = self._rk4(rho, H_eff, dt, substeps)
        while True:
            fine = self._rk4(rho, H_eff, dt, 2 * substeps)
            error = float(np.max(np.abs(fine - coarse)))
            if error <= self._tolerance:
                return fine, substeps
            if 4 * substeps > self._max_substeps:
                raise IntegrationError(
                    "Master-equation step rejected beyond the retry budget",
                    step=index,
                    substeps=2 * substeps,
                    error_estimate=error,
                )
            logger.debug("step %d: error %.3e with %d substeps, refining", index, error, 2 * substeps)
            substeps *= 2
            coarse = fine

    def _superoperator_step(self, rho: np.ndarray, H: np.ndarray, dt: float) -> np.ndarray:
        d = H.shape[0]
        identity = np.eye(d)
        H_eff = H - 0.5j * self._damping
        # Row-major vectorisation: vec(A rho B) = (A kron B^T) vec(rho).
        generator = -1j * (np.kron(H_eff, identity) - np.kron(identity, H_eff.conj()))
        for operator in self._collapse:
            generator += np.kron(operator, operator.conj())
        return (scipy.linalg.expm(dt * generator) @ rho.reshape(-1)).reshape(d, d)


def evolve_density(
    rho0: np.ndarray,
    waveform: ControlWaveform,
    H0: np.ndarray,
    decoherence: DecoherenceSpec,
    *,
    dims: HilbertDims,
    mode: IntegratorMode | str = IntegratorMode.RK4,
    substeps: int = DEFAULT_SUBSTEPS,
    tolerance: float = DEFAULT_STEP_TOLERANCE,
    max_substeps: int = DEFAULT_MAX_SUBSTEPS,
) -> np.ndarray:
    """Evolve one density matrix through ``waveform``; see :class:`LindbladIntegrator`."""
    integrator = LindbladIntegrator(
        H0,
        dims,
        decoherence,
        mode=mode,
        substeps=substeps,
        tolerance=tolerance,
        max_substeps=max_substeps,
    )
    return integrator.evolve(rho0, waveform)
