"""Logical single-qubit gates with flexible name parsing."""

from __future__ import annotations

import math
from enum import IntEnum

import numpy as np

_PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
_PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_MINUS_SIGNS = ("-", "−", "M")


def _rotation(axis: np.ndarray, angle: float) -> np.ndarray:
    return math.cos(angle / 2) * np.eye(2) - 1j * math.sin(angle / 2) * axis


class Gate(IntEnum):
    """
    Gates the logical qubit is driven with.

    The first eight members form the randomized-benchmarking set.
    """

    I = 0  # noqa: E741
    X90 = 1
    MX90 = 2
    X180 = 3
    Y90 = 4
    MY90 = 5
    Y180 = 6
    H = 7
    T = 8

    @classmethod
    def from_string(cls, value: str | int | Gate) -> Gate:
        """
        Parse a gate from its command-line spelling.

        Accepts ``"X90"``, ``"mX90"``, ``"-X90"``, ``"x180"`` and similar. Case is
        ignored and a leading ``m`` or minus sign selects the negative rotation.

        Raises:
            ValueError: if the supplied value cannot be matched to a gate.
        """
        if isinstance(value, cls):
            return value
        if isinstance(value, int):
            try:
                return cls(value)
            except ValueError as error:
                raise ValueError(f"Unrecognised gate value: {value!r}") from error

        text = str(value).strip()
        if not text:
            raise ValueError("Gate value cannot be empty.")
        normalised = text.upper()
        if len(normalised) > 1 and normalised[0] in _MINUS_SIGNS:
            normalised = "M" + normalised[1:]
        for gate in cls:
            if normalised == gate.name:
                return gate
        raise ValueError(f"Unrecognised gate value: {value!r}")

    @property
    def label(self) -> str:
        """Canonical command-line spelling, e.g. ``mX90``."""
        return "m" + self.name[1:] if self.name.startswith("M") else self.name

    def unitary(self) -> np.ndarray:
        """Return the 2x2 unitary in the ``(+Z_L, -Z_L)`` basis."""
        match self:
            case Gate.I:
                return np.eye(2, dtype=complex)
            case Gate.X90:
                return _rotation(_PAULI_X, math.pi / 2)
            case Gate.MX90:
                return _rotation(_PAULI_X, -math.pi / 2)
            case Gate.X180:
                return _rotation(_PAULI_X, math.pi)
            case Gate.Y90:
                return _rotation(_PAULI_Y, math.pi / 2)
            case Gate.MY90:
                return _rotation(_PAULI_Y, -math.pi / 2)
            case Gate.Y180:
                return _rotation(_PAULI_Y, math.pi)
            case Gate.H:
                return (_PAULI_X + _PAULI_Z) / math.sqrt(2)
            case Gate.T:
                return np.diag([1.0, np.exp(1j * math.pi / 4)])


RB_GATES = (Gate.I, Gate.X90, Gate.MX90, Gate.X180, Gate.Y90, Gate.MY90, Gate.Y180, Gate.H)


def equal_up_to_global_phase(first: np.ndarray, second: np.ndarray, *, atol: float = 1e-12) -> bool:
    """Return True when two matrices or vectors differ by a single unit-modulus factor."""
    first = np.asarray(first, dtype=complex)
    second = np.asarray(second, dtype=complex)
    if first.shape != second.shape:
        return False
    pivot = np.unravel_index(np.argmax(np.abs(second)), second.shape)
    if abs(second[pivot]) < atol:
        return bool(np.allclose(first, second, atol=atol, rtol=0.0))
    phase = first[pivot] / second[pivot]
    if abs(abs(phase) - 1.0) > max(atol, 1e-9):
        return False
    return bool(np.allclose(first, phase * second, atol=atol, rtol=0.0))
