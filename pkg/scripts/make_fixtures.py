#!/usr/bin/env python3
"""Regenerate the frozen test fixtures in tests/data/.

The input MIDI file is a small crafted performance: channel-0 notes with
controls interleaved, an off-channel note, a pitch bend, and gaps long
enough for q-note deadlines to fire both mid-file and at the end.  The
golden output is that file run through the accompaniment with seed 1; the
acceptance suite asserts byte identity, so regenerate deliberately and
review the diff when behaviour is meant to change.
"""
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from qubitfx.engine import run_cli
from qubitfx.midi import control_change, note_off, note_on, pitch_bend, write_midi_file

DATA = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"

INPUT_EVENTS = [
    (0.0, note_on(0, 60, 96)),
    (100.0, control_change(0, 7, 100)),
    (400.0, note_off(0, 60, 0)),
    (500.0, note_on(0, 64, 80)),       # replaces the first q-note early
    (600.0, note_on(5, 72, 70)),       # off-channel: passes through untouched
    (700.0, pitch_bend(0, 0, 72)),
    (900.0, note_off(0, 64, 0)),
    (1000.0, note_off(5, 72, 0)),
    (3000.0, note_on(0, 67, 110)),     # after the 500ms q-note expired at 2500
    (3200.0, note_off(0, 67, 0)),
    (5600.0, control_change(0, 1, 20)),  # after the 3000ms q-note expired at 5000
    (6000.0, control_change(0, 1, 0)),
]


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    infile = DATA / "accompaniment_input.mid"
    golden = DATA / "accompaniment_golden_seed1.mid"
    write_midi_file(infile, INPUT_EVENTS)
    status = run_cli(["midi", "--in", str(infile), "--out", str(golden), "--seed", "1"])
    if status != 0:
        raise SystemExit("fixture generation failed")
    print(f"wrote {infile} ({infile.stat().st_size} bytes)")
    print(f"wrote {golden} ({golden.stat().st_size} bytes)")


if __name__ == "__main__":
    main()
