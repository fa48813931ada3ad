"""Statevector value type and Born-rule probabilities."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CircuitError
from .gates import MAX_QUBITS

NORM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Statevector:
    """2^n complex amplitudes with unit norm; immutable after construction."""

    n_qubits: int
    amps: np.ndarray

    def __init__(self, n_qubits: int, amps):
        if not 1 <= n_qubits <= MAX_QUBITS:
            raise CircuitError(f"n_qubits must be 1..{MAX_QUBITS}, got {n_qubits}")
        amps = np.asarray(amps, dtype=np.complex128).reshape(-1)
        if amps.shape[0] != 2 ** n_qubits:
            raise CircuitError(
                f"expected {2 ** n_qubits} amplitudes for {n_qubits} qubits, got {amps.shape[0]}"
            )
        if not np.all(np.isfinite(amps.view(np.float64))):
            raise CircuitError("amplitudes must be finite")
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise CircuitError(f"statevector norm^2 = {norm_sq!r}, must be 1 within {NORM_TOL}")
        amps = amps.copy()
        amps.flags.writeable = False
        object.__setattr__(self, "n_qubits", n_qubits)
        object.__setattr__(self, "amps", amps)

    @classmethod
    def zero(cls, n_qubits: int) -> "Statevector":
        """|0...0>, the simulator's starting state."""
        amps = np.zeros(2 ** n_qubits, dtype=np.complex128)
        amps[0] = 1.0
        return cls(n_qubits, amps)

    def bitstring(self, index: int) -> str:
        """Outcome index as bits, wire n-1 (bottom) first, wire 0 (top) last."""
        return format(index, f"0{self.n_qubits}b")


def probabilities(state: Statevector) -> np.ndarray:
    """Born rule: p_i = |a_i|^2."""
    return np.abs(state.amps) ** 2


def format_statevector(state: Statevector) -> str:
    """Rows of `index bitstring re im prob`, one per amplitude."""
    probs = probabilities(state)
    lines = []
    for i, (a, p) in enumerate(zip(state.amps, probs)):
        lines.append(
            f"{i} {state.bitstring(i)} {a.real:+.15f} {a.imag:+.15f} {p:.15f}"
        )
    return "\n".join(lines)
