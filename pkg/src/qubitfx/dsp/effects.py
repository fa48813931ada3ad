"""The two effects: quantum distortion and the qubit-crusher.

Both walk the buffer in hops of `hop` samples, drawing one quantum byte per
hop from the stream and handing the per-sample loop to the kernel backend.

Distortion adds a centred offset, round(gain * (byte - 128) * 256), to every
sample of the hop: byte 128 is silence-neutral, 0x00/0xFF push a full-gain
signal to the clamp rails.  The crusher splits the byte into nibbles -- high
nibble h gives bit depth 1 + h, low nibble l gives a hold factor 1 + l --
quantizes and holds within the hop, and crossfades dry/wet by gain.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .. import kernels
from .wav import SampleBuffer


class EffectMode(Enum):
    DISTORT = "distort"
    QUBIT_CRUSH = "crush"


@dataclass
class EffectParams:
    """Performer-facing controls: gain and the rotation fraction s
    (the entangler angle is pi * s); hop sets samples per quantum update."""

    gain: float
    s: float = 0.0
    hop: int = 64
    mode: EffectMode = EffectMode.DISTORT

    def __post_init__(self):
        if not np.isfinite(self.gain) or not 0.0 <= self.gain <= 1.0:
            raise ValueError(f"gain must be in 0..1, got {self.gain}")
        if not np.isfinite(self.s):
            raise ValueError(f"rotation fraction must be finite, got {self.s}")
        if self.hop < 1:
            raise ValueError(f"hop must be >= 1, got {self.hop}")


def _hop_bytes(n_samples: int, hop: int, stream) -> np.ndarray:
    n_hops = -(-n_samples // hop)
    return np.fromiter((stream.next_byte() for _ in range(n_hops)),
                       dtype=np.uint8, count=n_hops)


def quantum_distort(buf: SampleBuffer, params: EffectParams, stream) -> SampleBuffer:
    qbytes = _hop_bytes(len(buf.samples), params.hop, stream)
    out = kernels.distort(buf.samples, qbytes, params.gain, params.hop)
    return SampleBuffer(buf.rate, out)


def qubit_crush(buf: SampleBuffer, params: EffectParams, stream) -> SampleBuffer:
    qbytes = _hop_bytes(len(buf.samples), params.hop, stream)
    out = kernels.crush(buf.samples, qbytes, params.gain, params.hop)
    return SampleBuffer(buf.rate, out)


def apply_effect(buf: SampleBuffer, params: EffectParams, stream) -> SampleBuffer:
    if params.mode is EffectMode.QUBIT_CRUSH:
        return qubit_crush(buf, params, stream)
    return quantum_distort(buf, params, stream)
