"""Quantum accompaniment: a shifted companion note for every played note.

Every incoming message passes through untouched.  A note-on on the listen
channel additionally ends any live q-note and starts a new one: the player's
note plus a semitone shift derived from a packed measurement byte.  The
entangler input for that byte is the PREVIOUS note divided by 63 (pipelined:
each note seeds the shift of the next), and a q-note left ringing is turned
off once its deadline passes.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .messages import MessageKind, MidiError, MidiMessage, note_off, note_on

DEFAULT_QNOTE_TTL_MS = 2000.0
SHIFT_RANGE = 24  # semitones; packed byte 0..255 maps onto 0..24


def note_to_s(note: int) -> float:
    """Normalized entangler input: note / 63 (so 0 <= s <= 2 over the keyboard)."""
    if not 0 <= note <= 127:
        raise MidiError(f"note {note} out of 0..127")
    return note / 63


def shift_from_packed(packed: int) -> int:
    """Monotone map from a packed measurement byte onto 0..24 semitones."""
    if not 0 <= packed <= 255:
        raise MidiError(f"packed byte {packed} out of 0..255")
    return round(SHIFT_RANGE * packed / 255)


@dataclass
class ActiveQnote:
    note: int
    channel: int
    off_deadline_ms: float


@dataclass
class AccompanimentState:
    """Single-owner mutable state; call process_message/tick from one thread.

    `source` is the quantum facade: any object with packed_byte(s) -> int.
    """

    source: object
    listen_channel: int = 0
    qnote_channel: int | None = None  # None: follow the listen channel
    qnote_ttl_ms: float = DEFAULT_QNOTE_TTL_MS
    next_s: float = 0.0
    active_qnote: ActiveQnote | None = field(default=None)

    def _out_channel(self) -> int:
        return self.listen_channel if self.qnote_channel is None else self.qnote_channel


def process_message(state: AccompanimentState, msg: MidiMessage,
                    now_ms: float) -> list[MidiMessage]:
    """Handle one incoming message; returns the messages to emit, input first."""
    out = [msg]
    if msg.kind is not MessageKind.NOTE_ON or msg.channel != state.listen_channel:
        return out

    if state.active_qnote is not None:
        q = state.active_qnote
        out.append(note_off(q.channel, q.note, 0))
        state.active_qnote = None

    packed = state.source.packed_byte(state.next_s)
    shift = shift_from_packed(packed)
    qnote = min(127, max(0, msg.data1 + shift))
    channel = state._out_channel()
    out.append(note_on(channel, qnote, msg.data2))
    state.active_qnote = ActiveQnote(qnote, channel, now_ms + state.qnote_ttl_ms)
    state.next_s = note_to_s(msg.data1)
    return out


def tick(state: AccompanimentState, now_ms: float) -> list[MidiMessage]:
    """Turn off an expired q-note (deadline inclusive); idempotent afterwards."""
    if state.active_qnote is not None and now_ms >= state.active_qnote.off_deadline_ms:
        q = state.active_qnote
        state.active_qnote = None
        return [note_off(q.channel, q.note, 0)]
    return []


def process_timed_events(state: AccompanimentState,
                         events: list[tuple[float, MidiMessage]],
                         ) -> list[tuple[float, MidiMessage]]:
    """Offline pipeline: run a timed message list through the accompaniment.

    The virtual clock comes from the event times themselves; pending q-note
    deadlines that fall before an event fire first, and a q-note still live
    after the last event is flushed at its deadline.
    """
    out: list[tuple[float, MidiMessage]] = []
    for time_ms, msg in events:
        while (state.active_qnote is not None
               and state.active_qnote.off_deadline_ms <= time_ms):
            deadline = state.active_qnote.off_deadline_ms
            out.extend((deadline, m) for m in tick(state, deadline))
        out.extend((time_ms, m) for m in process_message(state, msg, time_ms))
    if state.active_qnote is not None:
        deadline = state.active_qnote.off_deadline_ms
        out.extend((deadline, m) for m in tick(state, deadline))
    return out
