"""
Pauli transfer matrices of single-qubit channels.

Entries are ``R_ab = Tr(P_a G(P_b)) / 2`` over the basis ``(I, X, Y, Z)``.
Composition of channels is the matrix product of their transfer matrices.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from cat_grape.errors import NonPhysicalChannelError

PAULI_LABELS = ("I", "X", "Y", "Z")
PAULIS = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
ENTRY_TOLERANCE = 1e-9
TRACE_PRESERVATION_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class PauliTransferMatrix:
    """A real ``4 x 4`` transfer matrix in the ``(I, X, Y, Z)`` basis."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        """Check shape, realness and entry range, then freeze a copy."""
        matrix = np.array(self.matrix)
        if matrix.shape != (4, 4):
            raise ValueError(f"A Pauli transfer matrix must be 4x4, got {matrix.shape}.")
        if np.iscomplexobj(matrix):
            if np.max(np.abs(matrix.imag)) > ENTRY_TOLERANCE:
                raise ValueError("Pauli transfer matrix entries must be real.")
            matrix = matrix.real
        matrix = matrix.astype(float)
        if np.max(np.abs(matrix)) > 1 + 1e-6:
            raise ValueError("Pauli transfer matrix entries must lie in [-1, 1].")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def identity(cls) -> PauliTransferMatrix:
        return cls(np.eye(4))

    def is_trace_preserving(self, atol: float = TRACE_PRESERVATION_TOLERANCE) -> bool:
        return bool(np.allclose(self.matrix[0], [1.0, 0.0, 0.0, 0.0], atol=atol, rtol=0.0))

    def require_trace_preserving(self, atol: float = TRACE_PRESERVATION_TOLERANCE) -> None:
        """
        Raise if the first row is not ``(1, 0, 0, 0)``.

        Raises:
            NonPhysicalChannelError: if the channel does not preserve the trace.
        """
        if not self.is_trace_preserving(atol):
            raise NonPhysicalChannelError(f"Channel is not trace preserving: first row {self.matrix[0].tolist()}.")

    def completed(self) -> PauliTransferMatrix:
        """Return the trace-preserving completion that resets lost population to the maximally mixed state."""
        matrix = self.matrix.copy()
        matrix[0] = [1.0, 0.0, 0.0, 0.0]
        return PauliTransferMatrix(matrix)

    def then(self, other: PauliTransferMatrix) -> PauliTransferMatrix:
        """Return the channel that applies ``self`` first and ``other`` second."""
        return PauliTransferMatrix(other.matrix @ self.matrix)

    def apply(self, rho: np.ndarray) -> np.ndarray:
        """Apply the channel to a 2x2 density matrix."""
        coordinates = np.real(np.einsum("aij,ji->a", PAULIS, rho))
        return 0.5 * np.einsum("a,aij->ij", self.matrix @ coordinates, PAULIS)

    def as_channel(self) -> Callable[[np.ndarray], np.ndarray]:
        return self.apply


def ptm_from_unitary(unitary: np.ndarray) -> PauliTransferMatrix:
    """Return the transfer matrix of ``rho -> U rho U+``."""
    unitary = np.asarray(unitary, dtype=complex)
    conjugated = np.einsum("ij,bjk,lk->bil", unitary, PAULIS, unitary.conj())
    return PauliTransferMatrix(0.5 * np.real(np.einsum("aij,bji->ab", PAULIS, conjugated)))


def ptm_from_outputs(outputs: dict[str, np.ndarray]) -> PauliTransferMatrix:
    """
    Assemble a transfer matrix from the images of ``+Z``, ``-Z``, ``+X`` and ``+Y``.

    ``G(I) = G(+Z) + G(-Z)``, ``G(Z) = G(+Z) - G(-Z)``, ``G(X) = 2 G(+X) - G(I)``
    and ``G(Y) = 2 G(+Y) - G(I)``.
    """
    image_identity = outputs["+Z"] + outputs["-Z"]
    images = np.array(
        [
            image_identity,
            2 * outputs["+X"] - image_identity,
            2 * outputs["+Y"] - image_identity,
            outputs["+Z"] - outputs["-Z"],
        ]
    )
    return PauliTransferMatrix(0.5 * np.real(np.einsum("aij,bji->ab", PAULIS, images)))


def depolarizing_ptm(probability: float) -> PauliTransferMatrix:
    """Return ``diag(1, 1 - p, 1 - p, 1 - p)``."""
    if not 0 <= probability <= 4 / 3:
        raise ValueError("Depolarizing probability must lie in [0, 4/3].")
    return PauliTransferMatrix(np.diag([1.0, 1 - probability, 1 - probability, 1 - probability]))
