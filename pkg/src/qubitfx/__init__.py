"""qubitfx: quantum-simulator-driven MIDI accompaniment and audio effects.

Subpackages:
    sim     - fixed-capacity statevector simulator and measurement sampling
    midi    - MIDI wire/file processing, q-note accompaniment, patch SysEx
    dsp     - WAV I/O and the quantum distortion / qubit-crusher effects
    kernels - per-sample effect loops (compiled extension or pure Python)
    engine  - CLI, worker/mailbox plumbing, and the live WebSocket service
"""

__version__ = "0.1.0"
