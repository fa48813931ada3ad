"""MIDI wire messages: decoding byte streams and canonical serialization.

Messages are 2 or 3 bytes: a status byte (MSB set, low nibble = channel for
channel voice messages) followed by data bytes (MSB clear).  The decoder
supports running status (repeat messages with the status byte omitted),
passes unknown and realtime bytes through untouched, and resynchronizes on
the next status byte after malformed input.  Serialization is canonical:
every message gets its status byte, and a note-on with velocity 0 decodes
as the note-off it means.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class MidiError(ValueError):
    """A message failed validation or a stream/file could not be decoded."""


class MessageKind(Enum):
    NOTE_OFF = "note_off"
    NOTE_ON = "note_on"
    CONTROL_CHANGE = "control_change"
    PITCH_BEND = "pitch_bend"
    SYSEX = "sysex"
    OTHER = "other"


# status high nibble -> (kind, total byte count)
_CHANNEL_STATUS = {
    0x80: (MessageKind.NOTE_OFF, 3),
    0x90: (MessageKind.NOTE_ON, 3),
    0xA0: (MessageKind.OTHER, 3),  # polyphonic aftertouch
    0xB0: (MessageKind.CONTROL_CHANGE, 3),
    0xC0: (MessageKind.OTHER, 2),  # program change
    0xD0: (MessageKind.OTHER, 2),  # channel aftertouch
    0xE0: (MessageKind.PITCH_BEND, 3),
}

# system common data byte counts (status byte included); reserved ids are 1
_SYSTEM_LENGTH = {0xF1: 2, 0xF2: 3, 0xF3: 2, 0xF4: 1, 0xF5: 1, 0xF6: 1}

SYSEX_START = 0xF0
SYSEX_END = 0xF7


def _check_7bit(value: int, what: str) -> int:
    if not 0 <= value <= 127:
        raise MidiError(f"{what} {value} out of 0..127")
    return value


@dataclass(frozen=True)
class MidiMessage:
    """One decoded message.  `payload` holds the SysEx body, or the raw
    bytes of pass-through (OTHER) messages; `raw` records the bytes the
    message was decoded from (running status expanded, note-on/velocity-0
    kept in its 0x9n form) and never takes part in equality."""

    kind: MessageKind
    channel: int = 0
    data1: int = 0
    data2: int = 0
    payload: bytes = b""
    raw: bytes = field(default=b"", compare=False, repr=False)

    def is_channel_voice(self) -> bool:
        return self.kind in (
            MessageKind.NOTE_ON,
            MessageKind.NOTE_OFF,
            MessageKind.CONTROL_CHANGE,
            MessageKind.PITCH_BEND,
        ) or (self.kind is MessageKind.OTHER and self.payload and self.payload[0] < 0xF0)


def note_on(channel: int, note: int, velocity: int) -> MidiMessage:
    if velocity == 0:
        return note_off(channel, note, 0)
    return MidiMessage(
        MessageKind.NOTE_ON,
        _check_channel(channel),
        _check_7bit(note, "note"),
        _check_7bit(velocity, "velocity"),
    )


def note_off(channel: int, note: int, velocity: int = 0) -> MidiMessage:
    return MidiMessage(
        MessageKind.NOTE_OFF,
        _check_channel(channel),
        _check_7bit(note, "note"),
        _check_7bit(velocity, "velocity"),
    )


def control_change(channel: int, controller: int, value: int) -> MidiMessage:
    return MidiMessage(
        MessageKind.CONTROL_CHANGE,
        _check_channel(channel),
        _check_7bit(controller, "controller"),
        _check_7bit(value, "value"),
    )


def pitch_bend(channel: int, lsb: int, msb: int) -> MidiMessage:
    return MidiMessage(
        MessageKind.PITCH_BEND,
        _check_channel(channel),
        _check_7bit(lsb, "bend LSB"),
        _check_7bit(msb, "bend MSB"),
    )


def sysex(payload: bytes) -> MidiMessage:
    payload = bytes(payload)
    for b in payload:
        if b >= 0x80:
            raise MidiError(f"SysEx payload byte 0x{b:02X} has its MSB set")
    return MidiMessage(MessageKind.SYSEX, payload=payload)


def other(raw: bytes) -> MidiMessage:
    """Pass-through message from raw bytes; channel/data fields are filled
    in for channel-voice statuses so constructed and decoded messages agree."""
    raw = bytes(raw)
    if raw and 0x80 <= raw[0] < 0xF0:
        channel = raw[0] & 0x0F
        data1 = raw[1] if len(raw) > 1 else 0
        data2 = raw[2] if len(raw) > 2 else 0
        return MidiMessage(MessageKind.OTHER, channel, data1, data2, payload=raw)
    return MidiMessage(MessageKind.OTHER, payload=raw)


def _check_channel(channel: int) -> int:
    if not 0 <= channel <= 15:
        raise MidiError(f"channel {channel} out of 0..15")
    return channel


def serialize(msg: MidiMessage) -> bytes:
    """Canonical wire bytes (status always present, no running status)."""
    k = msg.kind
    if k is MessageKind.NOTE_ON:
        if msg.data2 == 0:
            raise MidiError("note-on with velocity 0 must be a note-off")
        return bytes([0x90 | _check_channel(msg.channel),
                      _check_7bit(msg.data1, "note"), _check_7bit(msg.data2, "velocity")])
    if k is MessageKind.NOTE_OFF:
        return bytes([0x80 | _check_channel(msg.channel),
                      _check_7bit(msg.data1, "note"), _check_7bit(msg.data2, "velocity")])
    if k is MessageKind.CONTROL_CHANGE:
        return bytes([0xB0 | _check_channel(msg.channel),
                      _check_7bit(msg.data1, "controller"), _check_7bit(msg.data2, "value")])
    if k is MessageKind.PITCH_BEND:
        return bytes([0xE0 | _check_channel(msg.channel),
                      _check_7bit(msg.data1, "bend LSB"), _check_7bit(msg.data2, "bend MSB")])
    if k is MessageKind.SYSEX:
        return bytes([SYSEX_START]) + msg.payload + bytes([SYSEX_END])
    if not msg.payload:
        raise MidiError("pass-through message with no bytes")
    return msg.payload


class MidiDecoder:
    """Incremental stream decoder; feed() may be called with partial data.

    Skipped (undecodable) bytes are recorded as (stream offset, byte) in
    `skipped` so a live caller can surface diagnostics without stalling.
    """

    def __init__(self):
        self._status: int | None = None  # running status
        self._pending: list[int] = []
        self._sysex: list[int] | None = None
        self._offset = 0
        self.skipped: list[tuple[int, int]] = []

    def feed(self, data: bytes) -> list[MidiMessage]:
        out: list[MidiMessage] = []
        for byte in data:
            self._step(byte, out)
            self._offset += 1
        return out

    def _step(self, byte: int, out: list[MidiMessage]) -> None:
        if byte >= 0xF8:  # realtime: passes through, never disturbs state
            out.append(MidiMessage(MessageKind.OTHER, payload=bytes([byte]),
                                   raw=bytes([byte])))
            return

        if self._sysex is not None:
            if byte == SYSEX_END:
                body = bytes(self._sysex)
                out.append(MidiMessage(MessageKind.SYSEX, payload=body,
                                       raw=bytes([SYSEX_START]) + body + bytes([SYSEX_END])))
                self._sysex = None
            elif byte < 0x80:
                self._sysex.append(byte)
            else:
                # a status byte terminates an unfinished SysEx; drop the body
                for i, b in enumerate(self._sysex):
                    self.skipped.append((self._offset - len(self._sysex) + i, b))
                self._sysex = None
                self._step(byte, out)
            return

        if byte >= 0x80:  # any status byte restarts decoding
            self._flush_pending_as_skipped()
            if byte == SYSEX_START:
                self._sysex = []
                self._status = None
            elif byte < 0xF0:
                self._status = byte
                self._pending = [byte]
                self._emit_if_complete(out)
            else:
                self._status = None  # system common clears running status
                self._pending = [byte]
                self._emit_if_complete(out)
            return

        # data byte
        if not self._pending:
            if self._status is None:
                self.skipped.append((self._offset, byte))  # resync: wait for a status
                return
            self._pending = [self._status]  # running status
        self._pending.append(byte)
        self._emit_if_complete(out)

    def _message_length(self, status: int) -> int:
        if status < 0xF0:
            return _CHANNEL_STATUS[status & 0xF0][1]
        return _SYSTEM_LENGTH.get(status, 1)

    def _emit_if_complete(self, out: list[MidiMessage]) -> None:
        status = self._pending[0]
        if len(self._pending) < self._message_length(status):
            return
        raw = bytes(self._pending)
        self._pending = []
        out.append(_decode(status, raw))

    def _flush_pending_as_skipped(self) -> None:
        if self._pending:
            start = self._offset - len(self._pending)
            self.skipped.extend((start + i, b) for i, b in enumerate(self._pending))
            self._pending = []


def _decode(status: int, raw: bytes) -> MidiMessage:
    if status >= 0xF0:
        return MidiMessage(MessageKind.OTHER, payload=raw, raw=raw)
    kind, _ = _CHANNEL_STATUS[status & 0xF0]
    channel = status & 0x0F
    data1 = raw[-2] if len(raw) >= 3 else raw[-1]
    data2 = raw[-1] if len(raw) >= 3 else 0
    if kind is MessageKind.NOTE_ON and data2 == 0:
        return MidiMessage(MessageKind.NOTE_OFF, channel, data1, 0, raw=raw)
    if kind is MessageKind.OTHER:
        return MidiMessage(MessageKind.OTHER, channel, data1, data2,
                           payload=raw, raw=raw)
    return MidiMessage(kind, channel, data1, data2, raw=raw)


def parse_stream(data: bytes) -> list[MidiMessage]:
    """Decode a whole byte stream; see MidiDecoder for incremental use."""
    return MidiDecoder().feed(data)
