#!/usr/bin/env python3
"""Render demo material into demo_out/: a clean test tone, its distorted and
crushed versions at a few settings, a short performance MIDI file, and its
quantum accompaniment.  Everything is seeded, so reruns are identical.

    python scripts/render_demos.py [--outdir demo_out]
"""
import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

import numpy as np

from qubitfx.dsp import SampleBuffer, write_wav
from qubitfx.engine import run_cli
from qubitfx.midi import note_off, note_on, write_midi_file

RATE = 44100


def melody_tone(seconds=4.0) -> SampleBuffer:
    """A little arpeggio of pure tones with a soft envelope."""
    notes = [60, 64, 67, 72, 67, 64, 60, 55]
    per = int(RATE * seconds / len(notes))
    chunks = []
    for note in notes:
        freq = 440.0 * 2 ** ((note - 69) / 12)
        t = np.arange(per) / RATE
        env = np.minimum(1.0, np.minimum(t / 0.02, (per / RATE - t) / 0.05))
        chunks.append(18000 * env * np.sin(2 * np.pi * freq * t))
    return SampleBuffer(RATE, np.concatenate(chunks).astype(np.int16))


def demo_midi(path) -> None:
    notes = [(0, 60), (500, 64), (1000, 67), (1500, 72), (2200, 71),
             (2700, 67), (3600, 64), (6500, 60)]
    events = []
    for t, n in notes:
        events.append((float(t), note_on(0, n, 100)))
        events.append((float(t + 350), note_off(0, n, 0)))
    events.sort(key=lambda e: e[0])
    write_midi_file(path, events)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--outdir", default="demo_out")
    args = parser.parse_args()
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    tone = outdir / "tone.wav"
    write_wav(melody_tone(), tone)
    print(f"wrote {tone}")

    recipes = [
        ("distort", "distort_s0.0_gain0.4.wav", ["--gain", "0.4", "--s", "0.0"]),
        ("distort", "distort_s0.5_gain0.8.wav", ["--gain", "0.8", "--s", "0.5"]),
        ("crush", "crush_s0.5_gain1.0.wav", ["--gain", "1.0", "--s", "0.5"]),
        ("crush", "crush_s1.0_gain0.6.wav", ["--gain", "0.6", "--s", "1.0"]),
    ]
    for command, name, extra in recipes:
        target = outdir / name
        status = run_cli([command, "--in", str(tone), "--out", str(target),
                          "--seed", "7", *extra])
        if status != 0:
            raise SystemExit(f"{command} failed")
        print(f"wrote {target}")

    perf = outdir / "performance.mid"
    demo_midi(perf)
    print(f"wrote {perf}")
    accompanied = outdir / "performance_quantum.mid"
    if run_cli(["midi", "--in", str(perf), "--out", str(accompanied), "--seed", "7"]) != 0:
        raise SystemExit("midi processing failed")
    print(f"wrote {accompanied}")

    patch = outdir / "quantum_patch.syx"
    if run_cli(["patch", "--out", str(patch), "--seed", "7",
                "--notes", "60,64,67,72"]) != 0:
        raise SystemExit("patch generation failed")
    print(f"wrote {patch}")


if __name__ == "__main__":
    main()
