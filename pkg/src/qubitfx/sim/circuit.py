"""Circuit representation: per-wire gate slots arranged in column slices.

A circuit is a column-wise program: each slice assigns one slot to every
wire.  A slot is either a plain single-qubit gate, a control marker paired
with exactly one gate elsewhere in the slice, or one of a pair of swap
markers.  Capacity is fixed at 4 qubits and 14 slices.

Text format (one line per slice, first token = wire 0 = top wire):

    H,I
    C,X

encodes a Hadamard on the top wire followed by a CNOT controlled by it.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import CircuitError
from .gates import H, I2, S, T, X, Y, Z, MAX_QUBITS, rx_matrix

MAX_SLICES = 14


class SlotKind(Enum):
    I = "I"
    X = "X"
    Y = "Y"
    Z = "Z"
    H = "H"
    S = "S"
    T = "T"
    RX = "RX"
    CONTROL = "C"
    SWAP = "SW"


_FIXED_MATRICES = {
    SlotKind.I: I2,
    SlotKind.X: X,
    SlotKind.Y: Y,
    SlotKind.Z: Z,
    SlotKind.H: H,
    SlotKind.S: S,
    SlotKind.T: T,
}

_RX_TOKEN = re.compile(r"^RX\(([^)]+)\)$", re.IGNORECASE)


@dataclass(frozen=True)
class GateSlot:
    kind: SlotKind
    angle: float = 0.0  # RX only

    def __post_init__(self):
        if self.kind is SlotKind.RX and not np.isfinite(self.angle):
            raise CircuitError(f"RX angle must be finite, got {self.angle}")

    @property
    def is_gate(self) -> bool:
        """True for slots that carry a 2x2 unitary (markers are not gates)."""
        return self.kind not in (SlotKind.CONTROL, SlotKind.SWAP)

    def matrix(self) -> np.ndarray:
        if self.kind is SlotKind.RX:
            return rx_matrix(self.angle)
        if not self.is_gate:
            raise CircuitError(f"{self.kind.value} marker has no matrix")
        return _FIXED_MATRICES[self.kind]

    def token(self) -> str:
        if self.kind is SlotKind.RX:
            return f"RX({self.angle!r})"
        return self.kind.value


IDENTITY = GateSlot(SlotKind.I)
CONTROL = GateSlot(SlotKind.CONTROL)
SWAP_MARK = GateSlot(SlotKind.SWAP)


def gate(name: str) -> GateSlot:
    """Fixed gate slot by token name (I, X, Y, Z, H, S, T, C, SW)."""
    return GateSlot(SlotKind(name.upper()))


def rx(theta: float) -> GateSlot:
    return GateSlot(SlotKind.RX, float(theta))


def parse_slot(token: str) -> GateSlot:
    token = token.strip()
    m = _RX_TOKEN.match(token)
    if m:
        try:
            return rx(float(m.group(1)))
        except ValueError:
            raise CircuitError(f"bad RX angle in token {token!r}") from None
    try:
        return GateSlot(SlotKind(token.upper()))
    except ValueError:
        raise CircuitError(f"unknown gate token {token!r}") from None


@dataclass(frozen=True)
class Slice:
    """One circuit column: a slot per wire, wire 0 first."""

    slots: tuple[GateSlot, ...]

    def __init__(self, slots):
        object.__setattr__(self, "slots", tuple(slots))

    def layout(self) -> tuple[str, tuple[int, ...]]:
        """Classify the slice.

        Returns ("plain", ()), ("controlled", (control, target)) or
        ("swap", (low, high)); raises CircuitError on malformed slices.
        """
        controls = [w for w, s in enumerate(self.slots) if s.kind is SlotKind.CONTROL]
        swaps = [w for w, s in enumerate(self.slots) if s.kind is SlotKind.SWAP]
        gates = [w for w, s in enumerate(self.slots)
                 if s.is_gate and s.kind is not SlotKind.I]
        if not controls and not swaps:
            return "plain", ()
        if len(controls) == 1 and not swaps:
            if len(gates) != 1:
                raise CircuitError(
                    "a control marker needs exactly one non-identity gate as target, "
                    f"found {len(gates)}"
                )
            return "controlled", (controls[0], gates[0])
        if len(swaps) == 2 and not controls and not gates:
            return "swap", (swaps[0], swaps[1])
        raise CircuitError(
            f"malformed slice: {len(controls)} control(s), {len(swaps)} swap mark(s), "
            f"{len(gates)} gate(s)"
        )

    def tokens(self) -> str:
        return ",".join(s.token() for s in self.slots)


@dataclass(frozen=True)
class Circuit:
    n_qubits: int
    slices: tuple[Slice, ...] = field(default=())

    def __init__(self, n_qubits: int, slices=()):
        if not 1 <= n_qubits <= MAX_QUBITS:
            raise CircuitError(f"n_qubits must be 1..{MAX_QUBITS}, got {n_qubits}")
        slices = tuple(slices)
        if len(slices) > MAX_SLICES:
            raise CircuitError(f"at most {MAX_SLICES} slices supported, got {len(slices)}")
        for i, slc in enumerate(slices):
            if len(slc.slots) != n_qubits:
                raise CircuitError(
                    f"slice {i} has {len(slc.slots)} slots for a {n_qubits}-qubit circuit"
                )
            slc.layout()  # raises on malformed slices
        object.__setattr__(self, "n_qubits", n_qubits)
        object.__setattr__(self, "slices", slices)


def parse_circuit(text: str) -> Circuit:
    """Parse the one-line-per-slice token format (see module docstring)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise CircuitError("empty circuit text")
    rows = [[parse_slot(tok) for tok in ln.split(",")] for ln in lines]
    n_qubits = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != n_qubits:
            raise CircuitError(
                f"slice {i} has {len(row)} slots but the first slice has {n_qubits}"
            )
    return Circuit(n_qubits, (Slice(row) for row in rows))


def format_circuit(circuit: Circuit) -> str:
    return "\n".join(slc.tokens() for slc in circuit.slices)
