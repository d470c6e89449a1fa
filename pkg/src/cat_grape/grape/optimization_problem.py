"""Everything that defines one pulse-synthesis problem."""

from __future__ import annotations

from dataclasses import dataclass, field

from cat_grape.dynamics import DEFAULT_DT_NS, ControlWaveform, GradientMethod, StateTransferSet
from cat_grape.grape.band_limit import BandLimit
from cat_grape.grape.penalties import PenaltyWeights
from cat_grape.operators import HamiltonianModel, HilbertDims

DEFAULT_PADS = (0, 2)
DEFAULT_INITIAL_AMPLITUDE = 1e-3


@dataclass(frozen=True, eq=False)
class OptimizationProblem:
    """
    A GRAPE problem evaluated at several oscillator truncations.

    ``transfers`` is defined at the base truncation ``transfers.dims`` and is
    zero-padded into ``base + pad`` for every entry of ``pads``. The initial
    waveform is band-limited complex noise of ``initial_amplitude`` (rad/ns)
    unless ``initial_waveform`` is given.
    """

    model: HamiltonianModel
    transfers: StateTransferSet
    steps: int
    dt: float = DEFAULT_DT_NS
    pads: tuple[int, ...] = DEFAULT_PADS
    weights: PenaltyWeights = field(default_factory=PenaltyWeights)
    band: BandLimit = field(default_factory=BandLimit)
    initial_amplitude: float = DEFAULT_INITIAL_AMPLITUDE
    initial_waveform: ControlWaveform | None = None
    gradient_method: GradientMethod = GradientMethod.EXACT

    def __post_init__(self) -> None:
        """Validate the grid, the pads and the band against each other."""
        if self.steps < 1:
            raise ValueError("steps must be at least 1.")
        if not self.dt > 0:
            raise ValueError("dt must be greater than zero.")
        if not self.pads:
            raise ValueError("At least one truncation pad is required.")
        if any(pad < 0 for pad in self.pads) or len(set(self.pads)) != len(self.pads):
            raise ValueError("pads must be distinct nonnegative integers.")
        if self.initial_amplitude < 0:
            raise ValueError("initial_amplitude must not be negative.")
        if self.initial_waveform is not None and (
            self.initial_waveform.steps != self.steps or self.initial_waveform.dt != self.dt
        ):
            raise ValueError("initial_waveform must share the problem's time grid.")
        self.band.validate(self.dt)
        self.band.masks(self.steps, self.dt)
        object.__setattr__(self, "pads", tuple(sorted(self.pads)))

    @property
    def base_dims(self) -> HilbertDims:
        return self.transfers.dims

    @property
    def truncations(self) -> tuple[HilbertDims, ...]:
        """Truncations the cost averages over, smallest first."""
        return tuple(self.base_dims.padded(pad) for pad in self.pads)

    def transfer_sets(self) -> tuple[StateTransferSet, ...]:
        """The transfer set embedded at every truncation."""
        return tuple(self.transfers.embedded(dims) for dims in self.truncations)
