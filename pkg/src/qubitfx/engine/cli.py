"""Command-line front end.

Subcommands:
    simulate  parse a circuit text file, print the statevector
    measure   sampled-measurement histogram (circuit file or entangler s)
    midi      run a MIDI file through the quantum accompaniment
    patch     generate a quantum patch SysEx file from a template
    distort   quantum distortion, WAV in / WAV out
    crush     qubit-crusher, WAV in / WAV out
    serve     live WebSocket service for the browser instrument
"""
from __future__ import annotations

import argparse
import sys
from collections import Counter

from ..dsp import (
    EffectMode,
    EffectParams,
    SimulatorByteStream,
    apply_effect,
    read_wav,
    write_wav,
)
from ..midi import (
    AccompanimentState,
    generate_patch,
    load_template,
    note_to_s,
    process_timed_events,
    read_midi_file,
    serialize,
    write_midi_file,
)
from ..sim import (
    DEFAULT_RESOLUTION,
    EntanglerByteSource,
    build_distribution,
    entangler_state,
    evolve,
    format_statevector,
    parse_circuit,
    probabilities,
    sample,
)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _cmd_simulate(args) -> int:
    circuit = parse_circuit(_read_text(args.circuit))
    state = evolve(circuit)
    print(format_statevector(state))
    return 0


def _cmd_measure(args) -> int:
    import random

    if args.circuit is not None:
        state = evolve(parse_circuit(_read_text(args.circuit)))
    else:
        state = entangler_state(args.s)
    dist = build_distribution(probabilities(state), args.resolution)
    rng = random.Random(args.seed)
    tally = Counter(sample(dist, rng) for _ in range(args.shots))
    for outcome in range(2 ** state.n_qubits):
        count = tally.get(outcome, 0)
        print(f"{outcome} {state.bitstring(outcome)} {count} {count / args.shots:.6f}")
    return 0


def _cmd_midi(args) -> int:
    events = read_midi_file(args.infile)
    state = AccompanimentState(
        source=EntanglerByteSource(args.seed, args.resolution),
        listen_channel=args.listen_channel,
        qnote_channel=args.qnote_channel,
        qnote_ttl_ms=args.ttl_ms,
    )
    write_midi_file(args.outfile, process_timed_events(state, events))
    return 0


def _cmd_patch(args) -> int:
    template = load_template(args.template)
    source = EntanglerByteSource(args.seed, args.resolution)
    if args.notes:
        s_values = [note_to_s(int(n)) for n in args.notes.split(",")]
    else:
        s_values = [args.s]
    needed = len(template.quantum_fields())
    qbytes = [source.packed_byte(s_values[i % len(s_values)]) for i in range(needed)]
    message = generate_patch(template, qbytes)
    with open(args.outfile, "wb") as fh:
        fh.write(serialize(message))
    return 0


def _cmd_effect(args, mode: EffectMode) -> int:
    buf = read_wav(args.infile)
    params = EffectParams(gain=args.gain, s=args.s, hop=args.hop, mode=mode)
    stream = SimulatorByteStream(args.s, seed=args.seed, resolution=args.resolution)
    write_wav(apply_effect(buf, params, stream), args.outfile)
    return 0


def _cmd_serve(args) -> int:
    from .service import SessionConfig, serve_forever

    config = SessionConfig(
        host=args.host,
        port=args.port,
        seed=args.seed,
        listen_channel=args.listen_channel,
        qnote_channel=args.qnote_channel,
        qnote_ttl_ms=args.ttl_ms,
        resolution=args.resolution,
    )
    serve_forever(config)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qubitfx",
                                     description="Quantum music effects toolbox")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, resolution=True):
        p.add_argument("--seed", type=int, default=None,
                       help="random seed (default: OS entropy)")
        if resolution:
            p.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION,
                           help="measurement distribution size (default 100)")

    p = sub.add_parser("simulate", help="print the statevector of a circuit file")
    p.add_argument("circuit", help="circuit text file, or - for stdin")
    common(p, resolution=False)
    p.set_defaults(fn=_cmd_simulate)

    p = sub.add_parser("measure", help="sampled-measurement histogram")
    p.add_argument("--circuit", default=None, help="circuit text file (default: entangler)")
    p.add_argument("--s", type=float, default=0.0, help="entangler rotation fraction")
    p.add_argument("--shots", type=int, default=10000)
    common(p)
    p.set_defaults(fn=_cmd_measure)

    p = sub.add_parser("midi", help="quantum accompaniment over a MIDI file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--listen-channel", type=int, default=0)
    p.add_argument("--qnote-channel", type=int, default=None)
    p.add_argument("--ttl-ms", type=float, default=2000.0)
    common(p)
    p.set_defaults(fn=_cmd_midi)

    p = sub.add_parser("patch", help="generate a quantum patch SysEx file")
    p.add_argument("--template", default=None, help="template file (default: bundled)")
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--s", type=float, default=0.0)
    p.add_argument("--notes", default=None,
                   help="comma-separated note numbers to derive s values from")
    common(p)
    p.set_defaults(fn=_cmd_patch)

    for name, mode in (("distort", EffectMode.DISTORT), ("crush", EffectMode.QUBIT_CRUSH)):
        p = sub.add_parser(name, help=f"{name} a WAV file")
        p.add_argument("--in", dest="infile", required=True)
        p.add_argument("--out", dest="outfile", required=True)
        p.add_argument("--gain", type=float, default=0.5)
        p.add_argument("--s", type=float, default=0.0)
        p.add_argument("--hop", type=int, default=64)
        common(p)
        p.set_defaults(fn=_cmd_effect, mode=mode)

    p = sub.add_parser("serve", help="run the live WebSocket service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--listen-channel", type=int, default=0)
    p.add_argument("--qnote-channel", type=int, default=None)
    p.add_argument("--ttl-ms", type=float, default=2000.0)
    common(p)
    p.set_defaults(fn=_cmd_serve)

    return parser


def run_cli(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command in ("distort", "crush"):
            return args.fn(args, args.mode)
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())
