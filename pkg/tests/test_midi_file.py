import pytest

from qubitfx.midi import (
    MessageKind,
    MidiError,
    control_change,
    note_off,
    note_on,
    read_midi_file,
    sysex,
    write_midi_file,
)
from qubitfx.midi.smf import _read_vlq, _write_vlq


@pytest.mark.parametrize("value", [0, 1, 127, 128, 500, 16383, 16384, 2097151, 2**27])
def test_vlq_roundtrip(value):
    encoded = _write_vlq(value)
    decoded, pos = _read_vlq(encoded, 0)
    assert decoded == value
    assert pos == len(encoded)


def test_write_read_roundtrip(tmp_path):
    events = [
        (0.0, note_on(0, 60, 96)),
        (250.0, control_change(0, 7, 100)),
        (500.0, note_off(0, 60, 0)),
        (1000.0, sysex(bytes([0x7D, 0x01]))),
        (2500.0, note_on(3, 72, 64)),
        (2600.0, note_off(3, 72, 0)),
    ]
    path = tmp_path / "roundtrip.mid"
    write_midi_file(path, events)
    back = read_midi_file(path)
    assert [m for _, m in back] == [m for _, m in events]
    # 480 ticks/quarter at 120 BPM makes the grid ~1.04 ms
    for (t_in, _), (t_out, _) in zip(events, back):
        assert abs(t_in - t_out) <= 0.6


def test_write_is_deterministic(tmp_path):
    events = [(0.0, note_on(0, 60, 96)), (100.0, note_off(0, 60, 0))]
    a, b = tmp_path / "a.mid", tmp_path / "b.mid"
    write_midi_file(a, events)
    write_midi_file(b, events)
    assert a.read_bytes() == b.read_bytes()


def test_tempo_changes_scale_the_clock(tmp_path):
    # hand-built format 0 file: tempo 120 BPM, note, tempo 60 BPM, note
    track = bytearray()
    track += bytes([0x00, 0xFF, 0x51, 0x03]) + (500_000).to_bytes(3, "big")
    track += bytes([0x60, 0x90, 0x3C, 0x40])          # delta 96 ticks = 100 ms
    track += bytes([0x00, 0xFF, 0x51, 0x03]) + (1_000_000).to_bytes(3, "big")
    track += bytes([0x60, 0x80, 0x3C, 0x00])          # delta 96 ticks = 200 ms now
    track += bytes([0x00, 0xFF, 0x2F, 0x00])
    data = b"MThd" + (6).to_bytes(4, "big") + bytes([0, 0, 0, 1]) + (480).to_bytes(2, "big")
    data += b"MTrk" + len(track).to_bytes(4, "big") + bytes(track)
    path = tmp_path / "tempo.mid"
    path.write_bytes(data)

    events = read_midi_file(path)
    assert len(events) == 2
    assert events[0][0] == pytest.approx(100.0)
    assert events[1][0] == pytest.approx(300.0)


def test_format1_tracks_merge_in_time_order(tmp_path):
    def track_bytes(events):
        body = bytearray()
        for delta, msg in events:
            body += _write_vlq(delta) + msg
        body += bytes([0x00, 0xFF, 0x2F, 0x00])
        return b"MTrk" + len(body).to_bytes(4, "big") + bytes(body)

    t1 = track_bytes([(0, bytes([0x90, 0x3C, 0x40])), (960, bytes([0x80, 0x3C, 0x00]))])
    t2 = track_bytes([(480, bytes([0x91, 0x40, 0x50])), (480, bytes([0x81, 0x40, 0x00]))])
    data = b"MThd" + (6).to_bytes(4, "big") + bytes([0, 1, 0, 2]) + (480).to_bytes(2, "big")
    data += t1 + t2
    path = tmp_path / "fmt1.mid"
    path.write_bytes(data)

    events = read_midi_file(path)
    assert [(round(t), m.channel, m.data1) for t, m in events] == [
        (0, 0, 60),
        (500, 1, 64),
        (1000, 0, 60),
        (1000, 1, 64),
    ]


def test_running_status_in_file(tmp_path):
    track = bytearray()
    track += bytes([0x00, 0x90, 0x3C, 0x40])
    track += bytes([0x10, 0x40, 0x50])  # running status note-on
    track += bytes([0x10, 0x3C, 0x00])  # running status: velocity-0 note-off
    track += bytes([0x00, 0xFF, 0x2F, 0x00])
    data = b"MThd" + (6).to_bytes(4, "big") + bytes([0, 0, 0, 1]) + (480).to_bytes(2, "big")
    data += b"MTrk" + len(track).to_bytes(4, "big") + bytes(track)
    path = tmp_path / "running.mid"
    path.write_bytes(data)

    kinds = [m.kind for _, m in read_midi_file(path)]
    assert kinds == [MessageKind.NOTE_ON, MessageKind.NOTE_ON, MessageKind.NOTE_OFF]


@pytest.mark.parametrize(
    "data",
    [
        b"",
        b"RIFX" + bytes(12),
        b"MThd" + (6).to_bytes(4, "big") + bytes([0, 2, 0, 1]) + (480).to_bytes(2, "big"),
        b"MThd" + (6).to_bytes(4, "big") + bytes([0, 0, 0, 1]) + (0xE250).to_bytes(2, "big"),
        b"MThd" + (6).to_bytes(4, "big") + bytes([0, 0, 0, 1]) + (480).to_bytes(2, "big") + b"XXXX",
    ],
)
def test_malformed_files_rejected(tmp_path, data):
    path = tmp_path / "bad.mid"
    path.write_bytes(data)
    with pytest.raises(MidiError):
        read_midi_file(path)


def test_unordered_events_rejected_on_write(tmp_path):
    events = [(100.0, note_on(0, 60, 96)), (0.0, note_off(0, 60, 0))]
    with pytest.raises(MidiError):
        write_midi_file(tmp_path / "x.mid", events)
