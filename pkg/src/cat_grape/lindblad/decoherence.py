"""Decoherence rates and the collapse operators they imply."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from cat_grape.operators import (
    HamiltonianModel,
    HilbertDims,
    number_operators,
    oscillator_annihilation,
    transmon_annihilation,
)

RATE_NAMES = ("transmon_relaxation", "transmon_dephasing", "oscillator_relaxation")


def _rate(time: float) -> float:
    return 0.0 if math.isinf(time) else 1.0 / time


@dataclass(frozen=True, slots=True)
class DecoherenceSpec:
    """
    Markovian decoherence rates in 1/ns.

    Pure dephasing enters as ``2 gamma_phi D[b+ b]`` so transmon coherences
    decay as ``exp(-gamma_phi t)``.
    """

    transmon_relaxation: float = 0.0
    transmon_dephasing: float = 0.0
    oscillator_relaxation: float = 0.0

    def __post_init__(self) -> None:
        """Require nonnegative, finite rates."""
        for name in RATE_NAMES:
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise ValueError(f"{name} must be a finite rate >= 0.")

    @classmethod
    def from_model(cls, model: HamiltonianModel) -> DecoherenceSpec:
        """Convert the model's decoherence times; infinite times give zero rates."""
        return cls(
            transmon_relaxation=_rate(model.t1_trans),
            transmon_dephasing=_rate(model.tphi_trans),
            oscillator_relaxation=_rate(model.t1_osc),
        )

    def without(self, *names: str) -> DecoherenceSpec:
        """Return a copy with the named rates switched off."""
        unknown = set(names) - set(RATE_NAMES)
        if unknown:
            raise ValueError(f"Unknown decoherence rates: {sorted(unknown)}.")
        return replace(self, **dict.fromkeys(names, 0.0))

    def scaled(self, factor: float) -> DecoherenceSpec:
        """Multiply every rate by ``factor``."""
        return DecoherenceSpec(*(factor * getattr(self, name) for name in RATE_NAMES))

    @property
    def is_closed(self) -> bool:
        return all(getattr(self, name) == 0.0 for name in RATE_NAMES)

    def collapse_operators(self, dims: HilbertDims) -> list[np.ndarray]:
        """Return the nonzero collapse operators ``sqrt(rate) L`` on the joint space."""
        _, n_trans = number_operators(dims)
        candidates = (
            (self.transmon_relaxation, transmon_annihilation(dims)),
            (2.0 * self.transmon_dephasing, n_trans),
            (self.oscillator_relaxation, oscillator_annihilation(dims)),
        )
        return [math.sqrt(rate) * operator for rate, operator in candidates if rate > 0]


def dissipator(operator: np.ndarray, rho: np.ndarray) -> np.ndarray:
    """Return ``L rho L+ - 1/2 {L+ L, rho}``."""
    if operator.shape != rho.shape:
        raise ValueError(f"Operator {operator.shape} and state {rho.shape} must have the same shape.")
    operator_dag = operator.conj().T
    jump = operator_dag @ operator
    return operator @ rho @ operator_dag - 0.5 * (jump @ rho + rho @ jump)
