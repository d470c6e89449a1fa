"""
Optimal-control pulse synthesis and in-silico verification for a cat-code
logical qubit stored in a microwave oscillator coupled to a transmon.

The sub-packages layer bottom-up:

* ``operators`` builds truncated ladder operators and the system Hamiltonian.
* ``dynamics`` propagates piecewise-constant controls and differentiates the
  transfer fidelity.
* ``grape`` assembles the band-limited, penalised cost and runs L-BFGS-B.
* ``catcode`` defines the codewords and the transfer sets of each target.
* ``lindblad`` re-simulates waveforms with decoherence.
* ``tomography`` and ``benchmarking`` characterise the resulting operations.
* ``experiment`` wires it all to configuration files and the command line.
"""

from cat_grape.catcode import Gate, LogicalBasis
from cat_grape.dynamics import ControlWaveform, StateTransferSet
from cat_grape.errors import CatGrapeError
from cat_grape.grape import OptimizationProblem, OptimizationResult, OptimizerSettings, optimize
from cat_grape.operators import HamiltonianModel, HilbertDims

__all__ = [
    "CatGrapeError",
    "ControlWaveform",
    "Gate",
    "HamiltonianModel",
    "HilbertDims",
    "LogicalBasis",
    "OptimizationProblem",
    "OptimizationResult",
    "OptimizerSettings",
    "StateTransferSet",
    "optimize",
]
