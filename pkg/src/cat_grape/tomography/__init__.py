"""
In-silico characterisation: Wigner functions, state reconstruction and qubit process tomography.
"""

from .fidelity import (
    DEFAULT_HAAR_SAMPLES,
    LITERATURE_ENCODE_DECODE_FIDELITY,
    LITERATURE_NO_OP_FIDELITY,
    average_fidelity,
    delta_fidelity,
    haar_average_fidelity,
    haar_random_states,
)
from .pauli_transfer_matrix import (
    PAULI_LABELS,
    PAULIS,
    PauliTransferMatrix,
    depolarizing_ptm,
    ptm_from_outputs,
    ptm_from_unitary,
)
from .process_tomography import CARDINAL_STATES, bloch_coordinates, process_tomography, sampled_expectations
from .reconstruction import project_to_density_matrix, project_to_simplex, reconstruct_from_wigner
from .wigner import (
    WIGNER_BOUND,
    WignerGrid,
    coherent_state,
    displacement,
    fock_wigner_kernels,
    reduce_to_oscillator,
    square_lattice,
    wigner,
    wigner_series,
    working_levels,
)

__all__ = [
    "CARDINAL_STATES",
    "DEFAULT_HAAR_SAMPLES",
    "LITERATURE_ENCODE_DECODE_FIDELITY",
    "LITERATURE_NO_OP_FIDELITY",
    "PAULIS",
    "PAULI_LABELS",
    "WIGNER_BOUND",
    "PauliTransferMatrix",
    "WignerGrid",
    "average_fidelity",
    "bloch_coordinates",
    "coherent_state",
    "delta_fidelity",
    "depolarizing_ptm",
    "displacement",
    "fock_wigner_kernels",
    "haar_average_fidelity",
    "haar_random_states",
    "process_tomography",
    "project_to_density_matrix",
    "project_to_simplex",
    "ptm_from_outputs",
    "ptm_from_unitary",
    "reconstruct_from_wigner",
    "reduce_to_oscillator",
    "sampled_expectations",
    "square_lattice",
    "wigner",
    "wigner_series",
    "working_levels",
]
