"""Audio effects over PCM sample buffers, with WAV file I/O."""
from .effects import EffectMode, EffectParams, apply_effect, quantum_distort, qubit_crush
from .qstream import MailboxByteStream, SimulatorByteStream, StubByteStream
from .wav import DEFAULT_RATE, SampleBuffer, WavFormatError, read_wav, write_wav

__all__ = [
    "DEFAULT_RATE",
    "EffectMode",
    "EffectParams",
    "MailboxByteStream",
    "SampleBuffer",
    "SimulatorByteStream",
    "StubByteStream",
    "WavFormatError",
    "apply_effect",
    "quantum_distort",
    "qubit_crush",
    "read_wav",
    "write_wav",
]
