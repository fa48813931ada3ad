#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs both implementations over the same buffers and reports throughput in
samples/second plus the speedup.  The outputs are also compared, so a run
doubles as a parity spot-check.

    python benchmarks/bench_kernels.py [--seconds 30] [--hop 64]
"""
import argparse
import time

import numpy as np

from qubitfx.kernels import _fallback

try:
    from qubitfx.kernels import _ckernels
except ImportError:
    _ckernels = None


def run(impl, fn_name, src, qbytes, gain, hop, repeats):
    out = np.empty_like(src)
    fn = getattr(impl, fn_name)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(src, qbytes, gain, hop, out)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--seconds", type=float, default=30.0,
                        help="length of the 44.1 kHz test buffer")
    parser.add_argument("--hop", type=int, default=64)
    parser.add_argument("--gain", type=float, default=0.8)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    n = int(44100 * args.seconds)
    src = rng.integers(-32768, 32768, size=n, dtype=np.int16)
    qbytes = rng.integers(0, 256, size=-(-n // args.hop), dtype=np.uint8)

    print(f"buffer: {n} samples ({args.seconds:.0f}s at 44.1 kHz), hop {args.hop}")
    if _ckernels is None:
        print("compiled extension not built; run `python setup.py build_ext --inplace`")

    for fn_name in ("distort_into", "crush_into"):
        label = fn_name.removesuffix("_into")
        t_py, out_py = run(_fallback, fn_name, src, qbytes, args.gain, args.hop,
                           repeats=2)
        line = f"{label:8s} python   {n / t_py / 1e6:8.2f} Msamples/s  ({t_py * 1e3:8.1f} ms)"
        print(line)
        if _ckernels is not None:
            t_c, out_c = run(_ckernels, fn_name, src, qbytes, args.gain, args.hop,
                             repeats=9)
            match = "outputs identical" if np.array_equal(out_py, out_c) else "OUTPUT MISMATCH"
            print(f"{label:8s} compiled {n / t_c / 1e6:8.2f} Msamples/s  "
                  f"({t_c * 1e3:8.1f} ms)  speedup {t_py / t_c:6.1f}x  [{match}]")


if __name__ == "__main__":
    main()
