"""Ladder operators and embeddings between truncations."""

from __future__ import annotations

import numpy as np

from cat_grape.errors import DimensionMismatchError, InvalidDimensionError
from cat_grape.operators.hilbert_dims import HilbertDims


def annihilation(n: int) -> np.ndarray:
    """
    Return the truncated annihilation operator of dimension ``n``.

    Raises:
        InvalidDimensionError: if ``n`` is smaller than two.
    """
    if n < 2:
        raise InvalidDimensionError(f"Ladder operators need at least 2 levels, got {n}.")
    return np.diag(np.sqrt(np.arange(1, n, dtype=float)), k=1).astype(complex)


def oscillator_annihilation(dims: HilbertDims) -> np.ndarray:
    """Return ``a`` acting on the joint space."""
    return np.kron(annihilation(dims.n_osc), np.eye(dims.n_trans))


def transmon_annihilation(dims: HilbertDims) -> np.ndarray:
    """Return ``b`` acting on the joint space."""
    return np.kron(np.eye(dims.n_osc), annihilation(dims.n_trans))


def number_operators(dims: HilbertDims) -> tuple[np.ndarray, np.ndarray]:
    """Return the oscillator and transmon number operators on the joint space."""
    n_osc = np.kron(np.diag(np.arange(dims.n_osc, dtype=float)), np.eye(dims.n_trans))
    n_trans = np.kron(np.eye(dims.n_osc), np.diag(np.arange(dims.n_trans, dtype=float)))
    return n_osc.astype(complex), n_trans.astype(complex)


def basis_state(dims: HilbertDims, n_osc: int, n_trans: int = 0) -> np.ndarray:
    """Return the joint Fock state ``|n_osc, n_trans>``."""
    state = np.zeros(dims.joint, dtype=complex)
    state[dims.index(n_osc, n_trans)] = 1.0
    return state


def _check_embedding(source: HilbertDims, target: HilbertDims) -> None:
    if target.n_osc < source.n_osc or target.n_trans < source.n_trans:
        raise DimensionMismatchError(f"Cannot embed {source} into the smaller truncation {target}.")


def embed_state(state: np.ndarray, source: HilbertDims, target: HilbertDims) -> np.ndarray:
    """Zero-pad a joint state vector into a truncation with at least as many levels."""
    _check_embedding(source, target)
    if state.shape != (source.joint,):
        raise DimensionMismatchError(f"State of shape {state.shape} does not match {source}.")
    padded = np.zeros((target.n_osc, target.n_trans), dtype=complex)
    padded[: source.n_osc, : source.n_trans] = state.reshape(source.n_osc, source.n_trans)
    return padded.reshape(-1)


def embed_operator(operator: np.ndarray, source: HilbertDims, target: HilbertDims) -> np.ndarray:
    """Zero-pad a joint operator so it acts on the first levels of a larger truncation."""
    _check_embedding(source, target)
    if operator.shape != (source.joint, source.joint):
        raise DimensionMismatchError(f"Operator of shape {operator.shape} does not match {source}.")
    padded = np.zeros((target.n_osc, target.n_trans, target.n_osc, target.n_trans), dtype=complex)
    padded[: source.n_osc, : source.n_trans, : source.n_osc, : source.n_trans] = operator.reshape(
        source.n_osc, source.n_trans, source.n_osc, source.n_trans
    )
    return padded.reshape(target.joint, target.joint)
