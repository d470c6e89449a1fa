import numpy as np
import pytest

from cat_grape.benchmarking import GateChannelSet, depolarizing_channel_set, ideal_channel_set
from cat_grape.catcode import RB_GATES, Gate
from cat_grape.dynamics import ControlWaveform
from cat_grape.errors import NonPhysicalChannelError
from cat_grape.lindblad import LogicalChannel
from cat_grape.tomography import PauliTransferMatrix, ptm_from_unitary


def test_needs_channels_or_waveforms() -> None:
    with pytest.raises(ValueError, match="needs channels or waveforms"):
        GateChannelSet()


def test_rejects_leaky_channels() -> None:
    with pytest.raises(NonPhysicalChannelError, match="not trace preserving"):
        GateChannelSet(channels={Gate.I: PauliTransferMatrix(np.diag([0.9, 1.0, 1.0, 1.0]))})


def test_mappings_are_read_only() -> None:
    channels = ideal_channel_set()

    with pytest.raises(TypeError):
        channels.channels[Gate.T] = ptm_from_unitary(Gate.T.unitary())  # type: ignore[index]


def test_ideal_set_covers_the_benchmarking_gates() -> None:
    channels = ideal_channel_set()

    channels.require_channels(RB_GATES)
    np.testing.assert_allclose(channels.channel(Gate.X180).matrix, np.diag([1.0, 1.0, -1.0, -1.0]), atol=1e-12)


def test_depolarizing_set_shrinks_the_bloch_vector() -> None:
    channel = depolarizing_channel_set(0.1).channel(Gate.I)

    np.testing.assert_allclose(channel.matrix, np.diag([1.0, 0.9, 0.9, 0.9]), atol=1e-12)


@pytest.mark.parametrize(
    ("lookup", "message"),
    [
        (lambda channels: channels.channel(Gate.T), "No channel for gate T."),
        (lambda channels: channels.waveform(Gate.X90), "No waveform for gate X90."),
        (lambda channels: channels.require_waveforms([Gate.I]), "Missing waveforms for gates: I."),
    ],
)
def test_missing_entries_are_named(lookup, message: str) -> None:
    with pytest.raises(ValueError, match=message):
        lookup(ideal_channel_set())


def test_logical_channels_are_completed() -> None:
    leaky = PauliTransferMatrix(np.diag([0.8, 0.8, 0.8, 0.8]))
    simulated = {
        Gate.I: LogicalChannel(ptm=leaky, ideal=ptm_from_unitary(np.eye(2)), leakage=0.2, average_fidelity=0.8)
    }
    waveform = ControlWaveform.zeros(3)

    channels = GateChannelSet.from_logical_channels(simulated, {Gate.I: waveform})

    np.testing.assert_allclose(channels.channel(Gate.I).matrix[0], [1.0, 0.0, 0.0, 0.0])
    np.testing.assert_allclose(np.diag(channels.channel(Gate.I).matrix)[1:], 0.8)
    assert channels.waveform(Gate.I) is waveform
