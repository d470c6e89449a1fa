"""
Four-component cat codewords.

``|+Z_L>`` keeps the Fock components ``n = 0 mod 4`` of a coherent state and
``|-Z_L>`` the components ``n = 2 mod 4``; both are even-parity states with
disjoint photon-number support.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln
from scipy.stats import poisson

from cat_grape.errors import TruncationError
from cat_grape.operators import HilbertDims

DEFAULT_ALPHA = math.sqrt(3)
DEFAULT_TAIL_TOLERANCE = 1e-9


def _support_residue(sign: int) -> int:
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}.")
    return 0 if sign == 1 else 2


def codeword_amplitudes(
    alpha: complex,
    sign: int,
    n_osc: int,
    *,
    tail_tolerance: float = DEFAULT_TAIL_TOLERANCE,
) -> np.ndarray:
    """
    Return the normalised Fock amplitudes of one codeword.

    Raises:
        ValueError: if ``alpha`` is zero or ``sign`` is not +1 or -1.
        TruncationError: if the population beyond ``n_osc`` exceeds ``tail_tolerance``.
    """
    residue = _support_residue(sign)
    mean = abs(alpha) ** 2
    if mean <= 0:
        raise ValueError("The cat amplitude must be non-zero.")

    levels = np.arange(n_osc)
    on_support = levels % 4 == residue
    # Weight of the support in the infinite Fock space: e^-|a|^2 (cosh|a|^2 +- cos|a|^2) / 2.
    total = 0.25 * (1.0 + math.exp(-2 * mean)) + 0.5 * sign * math.exp(-mean) * math.cos(mean)
    kept = float(np.sum(poisson.pmf(levels[on_support], mean)))
    tail = max(0.0, 1.0 - kept / total)
    if tail > tail_tolerance:
        raise TruncationError(
            f"Truncation n_osc={n_osc} drops {tail:.3e} of the codeword population for alpha={alpha}; "
            f"tolerance is {tail_tolerance:.1e}.",
            tail_mass=tail,
        )

    log_alpha = np.log(complex(alpha))
    amplitudes = np.zeros(n_osc, dtype=complex)
    support = levels[on_support]
    amplitudes[on_support] = np.exp(support * log_alpha - 0.5 * gammaln(support + 1))
    return amplitudes / np.linalg.norm(amplitudes)


def codeword(
    alpha: complex,
    sign: int,
    dims: HilbertDims,
    *,
    tail_tolerance: float = DEFAULT_TAIL_TOLERANCE,
) -> np.ndarray:
    """Return ``|+Z_L>`` (``sign=+1``) or ``|-Z_L>`` (``sign=-1``) with the transmon in ``|g>``."""
    state = np.zeros((dims.n_osc, dims.n_trans), dtype=complex)
    state[:, 0] = codeword_amplitudes(alpha, sign, dims.n_osc, tail_tolerance=tail_tolerance)
    return state.reshape(-1)


@dataclass(frozen=True, eq=False)
class LogicalBasis:
    """
    The six cardinal logical states of the cat code, transmon in ``|g>``.

    ``+-X_L = (+Z_L +- -Z_L)/sqrt 2`` and ``+-Y_L = (+Z_L +- i -Z_L)/sqrt 2``.
    """

    dims: HilbertDims
    alpha: complex = DEFAULT_ALPHA
    tail_tolerance: float = DEFAULT_TAIL_TOLERANCE
    plus_z: np.ndarray = field(init=False, repr=False)
    minus_z: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        """Build and freeze both codewords."""
        for name, sign in (("plus_z", 1), ("minus_z", -1)):
            vector = codeword(self.alpha, sign, self.dims, tail_tolerance=self.tail_tolerance)
            vector.setflags(write=False)
            object.__setattr__(self, name, vector)

    @property
    def plus_x(self) -> np.ndarray:
        return (self.plus_z + self.minus_z) / math.sqrt(2)

    @property
    def minus_x(self) -> np.ndarray:
        return (self.plus_z - self.minus_z) / math.sqrt(2)

    @property
    def plus_y(self) -> np.ndarray:
        return (self.plus_z + 1j * self.minus_z) / math.sqrt(2)

    @property
    def minus_y(self) -> np.ndarray:
        return (self.plus_z - 1j * self.minus_z) / math.sqrt(2)

    def cardinal_states(self) -> dict[str, np.ndarray]:
        """The six cardinal states keyed ``+Z``, ``-Z``, ``+X``, ``-X``, ``+Y``, ``-Y``."""
        return {
            "+Z": self.plus_z,
            "-Z": self.minus_z,
            "+X": self.plus_x,
            "-X": self.minus_x,
            "+Y": self.plus_y,
            "-Y": self.minus_y,
        }

    def isometry(self) -> np.ndarray:
        """Return the ``(d, 2)`` matrix whose columns are ``|+Z_L>`` and ``|-Z_L>``."""
        return np.column_stack([self.plus_z, self.minus_z])

    def code_projector(self) -> np.ndarray:
        """Projector onto the logical subspace."""
        isometry = self.isometry()
        return isometry @ isometry.conj().T

    def logical_state(self, qubit: np.ndarray) -> np.ndarray:
        """Map a two-component qubit vector into the code space."""
        return self.isometry() @ np.asarray(qubit, dtype=complex)
