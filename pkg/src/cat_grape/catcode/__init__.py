"""
Cat-code logical states and the transfer sets that define pulse targets.
"""

from .codewords import DEFAULT_ALPHA, DEFAULT_TAIL_TOLERANCE, LogicalBasis, codeword, codeword_amplitudes
from .gate import RB_GATES, Gate, equal_up_to_global_phase
from .transfer_sets import (
    decode_transfer_set,
    default_parity_probes,
    encode_transfer_set,
    fock_preparation_set,
    free_kerr_unitary,
    gate_transfer_set,
    kerr_correction_target,
    parity_map_set,
    parity_map_unitary,
)

__all__ = [
    "DEFAULT_ALPHA",
    "DEFAULT_TAIL_TOLERANCE",
    "RB_GATES",
    "Gate",
    "LogicalBasis",
    "codeword",
    "codeword_amplitudes",
    "decode_transfer_set",
    "default_parity_probes",
    "encode_transfer_set",
    "equal_up_to_global_phase",
    "fock_preparation_set",
    "free_kerr_unitary",
    "gate_transfer_set",
    "kerr_correction_target",
    "parity_map_set",
    "parity_map_unitary",
]
