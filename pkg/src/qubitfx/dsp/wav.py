"""Mono 16-bit PCM WAV reading and writing (RIFF parsed by hand so format
errors can name the offending chunk).  Stereo input is downmixed by
averaging; anything else is rejected."""
from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

DEFAULT_RATE = 44100


class WavFormatError(ValueError):
    """The file is not a WAV flavour this module handles."""


@dataclass
class SampleBuffer:
    rate: int
    samples: np.ndarray  # int16, mono

    def __post_init__(self):
        if self.rate <= 0:
            raise WavFormatError(f"sample rate must be positive, got {self.rate}")
        self.samples = np.ascontiguousarray(self.samples, dtype=np.int16)

    @property
    def duration_s(self) -> float:
        return len(self.samples) / self.rate


def read_wav(path) -> SampleBuffer:
    with open(path, "rb") as fh:
        data = fh.read()
    if len(data) < 12 or data[:4] != b"RIFF":
        raise WavFormatError("missing RIFF header")
    if data[8:12] != b"WAVE":
        raise WavFormatError("RIFF form type is not WAVE")

    fmt = None
    payload = None
    pos = 12
    while pos + 8 <= len(data):
        chunk_id = data[pos:pos + 4]
        (size,) = struct.unpack_from("<I", data, pos + 4)
        body = data[pos + 8:pos + 8 + size]
        if len(body) < size:
            raise WavFormatError(f"chunk {chunk_id!r} is truncated")
        if chunk_id == b"fmt ":
            fmt = body
        elif chunk_id == b"data":
            payload = body
        pos += 8 + size + (size & 1)  # chunks are word-aligned

    if fmt is None:
        raise WavFormatError("missing 'fmt ' chunk")
    if payload is None:
        raise WavFormatError("missing 'data' chunk")
    if len(fmt) < 16:
        raise WavFormatError("'fmt ' chunk is too short")
    audio_format, channels, rate, _, _, bits = struct.unpack_from("<HHIIHH", fmt, 0)
    if audio_format != 1:
        raise WavFormatError(f"'fmt ' chunk: audio format {audio_format} is not PCM")
    if bits != 16:
        raise WavFormatError(f"'fmt ' chunk: {bits}-bit samples unsupported (16 only)")
    if channels not in (1, 2):
        raise WavFormatError(f"'fmt ' chunk: {channels} channels unsupported (mono/stereo)")

    frames = np.frombuffer(payload[: len(payload) - len(payload) % (2 * channels)],
                           dtype="<i2")
    if channels == 2:
        pairs = frames.reshape(-1, 2).astype(np.int32)
        frames = ((pairs[:, 0] + pairs[:, 1]) // 2).astype(np.int16)
    return SampleBuffer(rate, frames.astype(np.int16))


def write_wav(buf: SampleBuffer, path) -> None:
    samples = np.ascontiguousarray(buf.samples, dtype="<i2")
    payload = samples.tobytes()
    header = b"RIFF" + struct.pack("<I", 36 + len(payload)) + b"WAVE"
    header += b"fmt " + struct.pack("<IHHIIHH", 16, 1, 1, buf.rate,
                                    buf.rate * 2, 2, 16)
    header += b"data" + struct.pack("<I", len(payload))
    with open(path, "wb") as fh:
        fh.write(header + payload)
