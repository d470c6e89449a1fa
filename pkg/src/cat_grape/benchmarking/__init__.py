"""
Randomized and interleaved randomized benchmarking of the logical qubit.
"""

from .channel_set import GateChannelSet, depolarizing_channel_set, ideal_channel_set
from .clifford_group import CLIFFORD_ORDER, CliffordGroup, clifford_rotation, rotation_key, rotation_of
from .decay_fit import FitResult, decay_model, fit_decay, irb_error, rb_error
from .randomized_benchmarking import (
    DEFAULT_LENGTHS,
    DEFAULT_LINDBLAD_LENGTHS,
    DEFAULT_LINDBLAD_SEQUENCES,
    DEFAULT_SHOTS,
    RBResult,
    ground_population,
    run_lindblad_rb,
    run_rb,
)
from .sequences import RBSequence, correction_for, default_group, rng_stream, sample_sequence

__all__ = [
    "CLIFFORD_ORDER",
    "DEFAULT_LENGTHS",
    "DEFAULT_LINDBLAD_LENGTHS",
    "DEFAULT_LINDBLAD_SEQUENCES",
    "DEFAULT_SHOTS",
    "CliffordGroup",
    "FitResult",
    "GateChannelSet",
    "RBResult",
    "RBSequence",
    "clifford_rotation",
    "correction_for",
    "decay_model",
    "default_group",
    "depolarizing_channel_set",
    "fit_decay",
    "ground_population",
    "ideal_channel_set",
    "irb_error",
    "rb_error",
    "rng_stream",
    "rotation_key",
    "rotation_of",
    "run_lindblad_rb",
    "run_rb",
    "sample_sequence",
]
