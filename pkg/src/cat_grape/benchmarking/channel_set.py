"""
Per-gate channels and pulses used by randomized benchmarking.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from cat_grape.catcode import RB_GATES, Gate
from cat_grape.dynamics import ControlWaveform
from cat_grape.lindblad import LogicalChannel
from cat_grape.tomography import PauliTransferMatrix, depolarizing_ptm, ptm_from_unitary


@dataclass(frozen=True, eq=False)
class GateChannelSet:
    """
    Simulated channels and/or pulses for every gate of a benchmarking set.

    Attributes:
        channels: Trace-preserving transfer matrix per gate.
        waveforms: Pulse per gate, used by full master-equation benchmarking.
    """

    channels: Mapping[Gate, PauliTransferMatrix] = field(default_factory=dict)
    waveforms: Mapping[Gate, ControlWaveform] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Check trace preservation and freeze the mappings."""
        if not self.channels and not self.waveforms:
            raise ValueError("A gate channel set needs channels or waveforms.")
        for gate, channel in self.channels.items():
            channel.require_trace_preserving()
            if not isinstance(gate, Gate):
                raise ValueError(f"Channel keys must be gates, got {gate!r}.")
        object.__setattr__(self, "channels", MappingProxyType(dict(self.channels)))
        object.__setattr__(self, "waveforms", MappingProxyType(dict(self.waveforms)))

    @classmethod
    def from_logical_channels(
        cls,
        simulated: Mapping[Gate, LogicalChannel],
        waveforms: Mapping[Gate, ControlWaveform] | None = None,
    ) -> GateChannelSet:
        """Build a set from simulated gates, sending leaked population to the maximally mixed state."""
        return cls(
            channels={gate: channel.ptm.completed() for gate, channel in simulated.items()},
            waveforms=waveforms or {},
        )

    def channel(self, gate: Gate) -> PauliTransferMatrix:
        try:
            return self.channels[gate]
        except KeyError as error:
            raise ValueError(f"No channel for gate {gate.label}.") from error

    def waveform(self, gate: Gate) -> ControlWaveform:
        try:
            return self.waveforms[gate]
        except KeyError as error:
            raise ValueError(f"No waveform for gate {gate.label}.") from error

    def require_channels(self, gates: Iterable[Gate]) -> None:
        missing = [gate.label for gate in gates if gate not in self.channels]
        if missing:
            raise ValueError(f"Missing channels for gates: {', '.join(missing)}.")

    def require_waveforms(self, gates: Iterable[Gate]) -> None:
        missing = [gate.label for gate in gates if gate not in self.waveforms]
        if missing:
            raise ValueError(f"Missing waveforms for gates: {', '.join(missing)}.")


def ideal_channel_set(gates: Iterable[Gate] = RB_GATES) -> GateChannelSet:
    """Noiseless unitary channels."""
    return GateChannelSet(channels={gate: ptm_from_unitary(gate.unitary()) for gate in gates})


def depolarizing_channel_set(probability: float, gates: Iterable[Gate] = RB_GATES) -> GateChannelSet:
    """Every ideal gate followed by the same depolarizing channel."""
    noise = depolarizing_ptm(probability)
    return GateChannelSet(channels={gate: ptm_from_unitary(gate.unitary()).then(noise) for gate in gates})
