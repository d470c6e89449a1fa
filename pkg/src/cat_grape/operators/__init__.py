"""
Truncated operators and Hamiltonians for the oscillator-transmon system.

All matrices are dense and share the oscillator-major joint ordering defined
by :class:`HilbertDims`.
"""

from .hamiltonian_model import (
    MHZ_TO_RAD_PER_NS,
    US_TO_NS,
    HamiltonianModel,
    angular_to_megahertz,
    megahertz_to_angular,
)
from .hamiltonians import DRIVE_LABELS, build_drive_operators, build_static_hamiltonian, drive_hamiltonian
from .hilbert_dims import HilbertDims
from .ladder import (
    annihilation,
    basis_state,
    embed_operator,
    embed_state,
    number_operators,
    oscillator_annihilation,
    transmon_annihilation,
)

__all__ = [
    "DRIVE_LABELS",
    "MHZ_TO_RAD_PER_NS",
    "US_TO_NS",
    "HamiltonianModel",
    "HilbertDims",
    "angular_to_megahertz",
    "annihilation",
    "basis_state",
    "build_drive_operators",
    "build_static_hamiltonian",
    "drive_hamiltonian",
    "embed_operator",
    "embed_state",
    "megahertz_to_angular",
    "number_operators",
    "oscillator_annihilation",
    "transmon_annihilation",
]
