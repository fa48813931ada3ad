"""Hot effect loops: compiled extension when available, pure Python otherwise.

BACKEND reports which implementation was selected ("compiled" or "python").
Set QUBITFX_PURE_PYTHON=1 to force the fallback, e.g. for benchmarking or
debugging; both produce bit-identical output.
"""
from __future__ import annotations

import os

import numpy as np

_force_python = os.environ.get("QUBITFX_PURE_PYTHON", "") not in ("", "0")
if _force_python:
    from . import _fallback as _impl
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
        BACKEND = "compiled"
    except ImportError:
        from . import _fallback as _impl
        BACKEND = "python"


def _prepare(samples, qbytes, hop: int):
    src = np.ascontiguousarray(samples, dtype=np.int16)
    q = np.ascontiguousarray(qbytes, dtype=np.uint8)
    if hop < 1:
        raise ValueError(f"hop must be >= 1, got {hop}")
    needed = -(-src.shape[0] // hop)  # ceil division
    if q.shape[0] != needed:
        raise ValueError(f"expected {needed} quantum bytes for {src.shape[0]} samples "
                         f"at hop {hop}, got {q.shape[0]}")
    return src, q, np.empty_like(src)


def distort(samples, qbytes, gain: float, hop: int) -> np.ndarray:
    """Add the per-hop centred quantum offset to every sample, clamped."""
    src, q, out = _prepare(samples, qbytes, hop)
    _impl.distort_into(src, q, gain, hop, out)
    return out


def crush(samples, qbytes, gain: float, hop: int) -> np.ndarray:
    """Bit-depth/sample-rate crush with per-hop quantum settings, crossfaded."""
    src, q, out = _prepare(samples, qbytes, hop)
    _impl.crush_into(src, q, gain, hop, out)
    return out
