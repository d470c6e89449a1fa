"""
Target state-transfer sets for every operation the pulses implement.

Logical gates are specified only on ``|g, +-Z_L>``; the coherent fidelity ties
the two transfers to one global phase, which fixes the operation on the whole
code space. Odd-parity states are left unconstrained.
"""

from __future__ import annotations

import numpy as np

from cat_grape.catcode.codewords import LogicalBasis
from cat_grape.catcode.gate import Gate
from cat_grape.dynamics import StateTransferSet
from cat_grape.operators import HamiltonianModel, HilbertDims, basis_state


def encode_transfer_set(basis: LogicalBasis) -> StateTransferSet:
    """Return ``{|g,0> -> |g,+Z_L>, |e,0> -> |g,-Z_L>}`` with zero relative phase."""
    dims = basis.dims
    initial = np.array([basis_state(dims, 0, 0), basis_state(dims, 0, 1)])
    return StateTransferSet(dims, initial, np.array([basis.plus_z, basis.minus_z]))


def decode_transfer_set(basis: LogicalBasis) -> StateTransferSet:
    """Return the reverse of :func:`encode_transfer_set`."""
    return encode_transfer_set(basis).reversed()


def gate_transfer_set(basis: LogicalBasis, gate: Gate | str) -> StateTransferSet:
    """Return ``{|g,+-Z_L> -> U_gate |g,+-Z_L>}`` with ``U_gate`` acting on the code space."""
    unitary = Gate.from_string(gate).unitary()
    isometry = basis.isometry()
    targets = (isometry @ unitary).T
    return StateTransferSet(basis.dims, isometry.T, targets)


def fock_preparation_set(dims: HilbertDims, n_target: int) -> StateTransferSet:
    """
    Return ``{|g,0> -> |g,n_target>}``.

    Raises:
        ValueError: if ``n_target`` is negative or not below ``dims.n_osc``.
    """
    if not 0 <= n_target < dims.n_osc:
        raise ValueError(f"Fock target {n_target} is outside the truncation 0..{dims.n_osc - 1}.")
    return StateTransferSet(dims, basis_state(dims, 0, 0)[None, :], basis_state(dims, n_target, 0)[None, :])


def parity_map_unitary(dims: HilbertDims) -> np.ndarray:
    """Return ``P_even (x) I + P_odd (x) X`` on the transmon's ``g``/``e`` levels."""
    flip = np.eye(dims.n_trans, dtype=complex)
    flip[:2, :2] = [[0, 1], [1, 0]]
    odd = np.diag((np.arange(dims.n_osc) % 2).astype(float))
    even = np.eye(dims.n_osc) - odd
    return np.kron(even, np.eye(dims.n_trans)) + np.kron(odd, flip)


def default_parity_probes(dims: HilbertDims, n_max: int) -> list[np.ndarray]:
    """Fock probes ``|g, n>`` for ``n < n_max``."""
    if not 1 <= n_max <= dims.n_osc:
        raise ValueError(f"n_max must lie in 1..{dims.n_osc}, got {n_max}.")
    return [basis_state(dims, n, 0) for n in range(n_max)]


def parity_map_set(probes: list[np.ndarray], dims: HilbertDims) -> StateTransferSet:
    """Map every probe through the parity-conditioned transmon flip."""
    if not probes:
        raise ValueError("At least one probe state is required.")
    unitary = parity_map_unitary(dims)
    initial = np.array(probes, dtype=complex)
    return StateTransferSet(dims, initial, initial @ unitary.T)


def free_kerr_unitary(model: HamiltonianModel, dims: HilbertDims, duration: float) -> np.ndarray:
    """Return ``exp(-i t K/2 a+^2 a^2)`` on the joint space."""
    n = np.arange(dims.n_osc, dtype=float)
    phases = np.exp(-1j * duration * 0.5 * model.kerr * n * (n - 1))
    return np.kron(np.diag(phases), np.eye(dims.n_trans))


def kerr_correction_target(basis: LogicalBasis, model: HamiltonianModel, delta_t: float) -> StateTransferSet:
    """
    Return transfers that undo ``delta_t`` ns of free Kerr evolution on ``|g,+-Z_L>``.

    Raises:
        ValueError: if ``delta_t`` is negative.
    """
    if delta_t < 0:
        raise ValueError("delta_t must not be negative.")
    correction = free_kerr_unitary(model, basis.dims, -delta_t)
    initial = basis.isometry().T
    return StateTransferSet(basis.dims, initial, initial @ correction.T)
