"""Standard MIDI file (format 0/1) reading and writing.

Reading merges all tracks into one list of (time_ms, message) pairs, with
tempo-change meta events applied to the tick clock; other meta events are
timing-only concerns and are dropped.  Writing produces a single-track
format 0 file at 480 ticks per quarter, 120 BPM, which is enough to carry
processed performances back out byte-deterministically.
"""
from __future__ import annotations

from .messages import (
    MessageKind,
    MidiError,
    MidiMessage,
    SYSEX_END,
    SYSEX_START,
    other,
    parse_stream,
    serialize,
    sysex,
)

_HEADER_MAGIC = b"MThd"
_TRACK_MAGIC = b"MTrk"

WRITE_DIVISION = 480
WRITE_TEMPO_US = 500_000  # microseconds per quarter note (120 BPM)

TimedMessage = tuple[float, MidiMessage]


def _read_vlq(data: bytes, pos: int) -> tuple[int, int]:
    value = 0
    for _ in range(4):
        if pos >= len(data):
            raise MidiError("truncated variable-length quantity")
        byte = data[pos]
        pos += 1
        value = (value << 7) | (byte & 0x7F)
        if not byte & 0x80:
            return value, pos
    raise MidiError("variable-length quantity longer than 4 bytes")


def _write_vlq(value: int) -> bytes:
    if value < 0:
        raise MidiError(f"cannot encode negative delta {value}")
    chunks = [value & 0x7F]
    value >>= 7
    while value:
        chunks.append(0x80 | (value & 0x7F))
        value >>= 7
    return bytes(reversed(chunks))


_CHANNEL_LENGTH = {0x80: 3, 0x90: 3, 0xA0: 3, 0xB0: 3, 0xC0: 2, 0xD0: 2, 0xE0: 3}


def _parse_track(data: bytes) -> list[tuple[int, int | None, bytes]]:
    """Yield (abs_tick, tempo_us | None, message bytes) triples for a track.

    Tempo entries carry tempo_us and empty bytes; message entries the
    reverse.  Raises MidiError on anything structurally unsound.
    """
    events = []
    pos = 0
    tick = 0
    running: int | None = None
    while pos < len(data):
        delta, pos = _read_vlq(data, pos)
        tick += delta
        if pos >= len(data):
            raise MidiError("track ends inside an event")
        byte = data[pos]
        if byte == 0xFF:  # meta
            if pos + 2 > len(data):
                raise MidiError("truncated meta event")
            meta_type = data[pos + 1]
            length, body_pos = _read_vlq(data, pos + 2)
            body = data[body_pos:body_pos + length]
            if len(body) < length:
                raise MidiError("truncated meta event body")
            pos = body_pos + length
            running = None
            if meta_type == 0x51:
                if length != 3:
                    raise MidiError("malformed set-tempo meta event")
                events.append((tick, int.from_bytes(body, "big"), b""))
            elif meta_type == 0x2F:
                break  # end of track
        elif byte == SYSEX_START:
            length, body_pos = _read_vlq(data, pos + 1)
            body = data[body_pos:body_pos + length]
            if len(body) < length:
                raise MidiError("truncated SysEx event")
            pos = body_pos + length
            running = None
            if body.endswith(bytes([SYSEX_END])):
                body = body[:-1]
            events.append((tick, None, bytes([SYSEX_START]) + body + bytes([SYSEX_END])))
        elif byte == SYSEX_END:  # escape event: raw pass-through bytes
            length, body_pos = _read_vlq(data, pos + 1)
            body = data[body_pos:body_pos + length]
            if len(body) < length:
                raise MidiError("truncated escape event")
            pos = body_pos + length
            running = None
            events.append((tick, None, bytes(body)))
        elif byte >= 0xF8:
            events.append((tick, None, bytes([byte])))
            pos += 1
        else:
            if byte >= 0x80:
                status = byte
                pos += 1
                running = status
            elif running is not None:
                status = running
            else:
                raise MidiError(f"data byte 0x{byte:02X} with no running status")
            if status >= 0xF0:
                raise MidiError(f"unexpected system status 0x{status:02X} in track")
            length = _CHANNEL_LENGTH[status & 0xF0]
            need = length - 1
            body = data[pos:pos + need]
            if len(body) < need:
                raise MidiError("truncated channel message")
            pos += need
            events.append((tick, None, bytes([status]) + body))
    return events


def read_midi_file(path) -> list[TimedMessage]:
    """Parse an SMF into (milliseconds, MidiMessage) pairs, tracks merged."""
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:4] != _HEADER_MAGIC:
        raise MidiError("not a MIDI file (missing MThd)")
    header_len = int.from_bytes(data[4:8], "big")
    if header_len < 6:
        raise MidiError("malformed MThd length")
    fmt = int.from_bytes(data[8:10], "big")
    n_tracks = int.from_bytes(data[10:12], "big")
    division = int.from_bytes(data[12:14], "big")
    if fmt not in (0, 1):
        raise MidiError(f"unsupported MIDI file format {fmt}")
    if division & 0x8000:
        raise MidiError("SMPTE time division is not supported")
    if division == 0:
        raise MidiError("zero ticks-per-quarter division")

    pos = 8 + header_len
    raw_events: list[tuple[int, int, int, int | None, bytes]] = []
    for track_index in range(n_tracks):
        if data[pos:pos + 4] != _TRACK_MAGIC:
            raise MidiError(f"track {track_index}: missing MTrk chunk")
        length = int.from_bytes(data[pos + 4:pos + 8], "big")
        chunk = data[pos + 8:pos + 8 + length]
        if len(chunk) < length:
            raise MidiError(f"track {track_index}: truncated chunk")
        pos += 8 + length
        for order, (tick, tempo, payload) in enumerate(_parse_track(chunk)):
            raw_events.append((tick, track_index, order, tempo, payload))

    # merge tracks; stable within equal ticks by (track, in-track order)
    raw_events.sort(key=lambda e: (e[0], e[1], e[2]))

    out: list[TimedMessage] = []
    tempo_us = WRITE_TEMPO_US
    last_tick = 0
    now_ms = 0.0
    for tick, _track, _order, tempo, payload in raw_events:
        now_ms += (tick - last_tick) * tempo_us / (division * 1000)
        last_tick = tick
        if tempo is not None:
            tempo_us = tempo
            continue
        for msg in _decode_file_event(payload):
            out.append((now_ms, msg))
    return out


def _decode_file_event(payload: bytes) -> list[MidiMessage]:
    if payload and payload[0] == SYSEX_START:
        return [sysex(payload[1:-1])]
    msgs = parse_stream(payload)
    return msgs if msgs else [other(payload)]


def write_midi_file(path, events: list[TimedMessage]) -> None:
    """Write (milliseconds, message) pairs as a format 0 file.

    Events must be time-ordered; times are quantized to the 480-ticks/quarter
    grid at 120 BPM (roughly 1 ms resolution).
    """
    body = bytearray()
    body += _write_vlq(0) + bytes([0xFF, 0x51, 0x03]) + WRITE_TEMPO_US.to_bytes(3, "big")
    last_tick = 0
    for time_ms, msg in events:
        if time_ms < 0:
            raise MidiError(f"negative event time {time_ms}")
        tick = round(time_ms * WRITE_DIVISION * 1000 / WRITE_TEMPO_US)
        if tick < last_tick:
            raise MidiError("events are not time-ordered")
        wire = serialize(msg)
        if msg.kind is MessageKind.SYSEX:
            frame = bytes([SYSEX_START]) + _write_vlq(len(wire) - 1) + wire[1:]
        elif wire[0] >= 0xF0:
            raise MidiError(
                f"system message 0x{wire[0]:02X} is not representable in a MIDI file"
            )
        else:
            frame = wire
        body += _write_vlq(tick - last_tick) + frame
        last_tick = tick
    body += _write_vlq(0) + bytes([0xFF, 0x2F, 0x00])

    header = _HEADER_MAGIC + (6).to_bytes(4, "big")
    header += (0).to_bytes(2, "big") + (1).to_bytes(2, "big")
    header += WRITE_DIVISION.to_bytes(2, "big")
    track = _TRACK_MAGIC + len(body).to_bytes(4, "big") + bytes(body)
    with open(path, "wb") as fh:
        fh.write(header + track)
