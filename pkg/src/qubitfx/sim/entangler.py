"""The hard-coded performer circuit: H / Rx(pi*s), then CNOT.

A single normalized input s sweeps the output between the Bell states
(|00>+|11>)/sqrt(2) at s = 0 and the |01>/|10> pair at s = 1; behaviour is
periodic in s with period 2 because only cos/sin of pi*s/2 enter.
"""
from __future__ import annotations

from math import cos, pi, sin, sqrt

import numpy as np

from .circuit import CONTROL, Circuit, Slice, gate, rx
from .errors import CircuitError
from .state import Statevector

_SQRT2_INV = 1 / sqrt(2)


def entangler_circuit(s: float) -> Circuit:
    """Two slices on two wires: [H, Rx(pi*s)] then [control, X]."""
    return Circuit(2, (
        Slice((gate("H"), rx(pi * s))),
        Slice((CONTROL, gate("X"))),
    ))


def entangler_state(s: float) -> Statevector:
    """Closed-form output of entangler_circuit(s) on |00>.

    Amplitudes are (c, -i*q, -i*q, c) with c = cos(pi*s/2)/sqrt(2) and
    q = sin(pi*s/2)/sqrt(2); agrees with the slice-by-slice evolution to
    within 1e-12 (the general path is the oracle for this fast path).
    """
    if not np.isfinite(s):
        raise CircuitError(f"entangler input must be finite, got {s}")
    half = pi * float(s) / 2
    c = cos(half) * _SQRT2_INV
    q = sin(half) * _SQRT2_INV
    return Statevector(2, np.array([c, -1j * q, -1j * q, c], dtype=np.complex128))
