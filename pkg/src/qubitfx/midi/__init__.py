"""MIDI wire/file processing, quantum accompaniment, and patch generation."""
from .accompany import (
    AccompanimentState,
    ActiveQnote,
    DEFAULT_QNOTE_TTL_MS,
    SHIFT_RANGE,
    note_to_s,
    process_message,
    process_timed_events,
    shift_from_packed,
    tick,
)
from .messages import (
    MessageKind,
    MidiDecoder,
    MidiError,
    MidiMessage,
    control_change,
    note_off,
    note_on,
    other,
    parse_stream,
    pitch_bend,
    serialize,
    sysex,
)
from .patch import PatchError, PatchField, PatchTemplate, generate_patch, load_template, parse_template
from .smf import read_midi_file, write_midi_file

__all__ = [
    "AccompanimentState",
    "ActiveQnote",
    "DEFAULT_QNOTE_TTL_MS",
    "MessageKind",
    "MidiDecoder",
    "MidiError",
    "MidiMessage",
    "PatchError",
    "PatchField",
    "PatchTemplate",
    "SHIFT_RANGE",
    "control_change",
    "generate_patch",
    "load_template",
    "note_off",
    "note_on",
    "note_to_s",
    "other",
    "parse_stream",
    "parse_template",
    "pitch_bend",
    "process_message",
    "process_timed_events",
    "read_midi_file",
    "serialize",
    "shift_from_packed",
    "sysex",
    "tick",
    "write_midi_file",
]
