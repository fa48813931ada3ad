"""Slice-wise operator construction and statevector evolution.

Operators are built one slice at a time and applied immediately, so the
number of full-size (2^n x 2^n) matrices alive at once stays small: one for
the slice being applied, plus one transient term while controlled and swap
slices are accumulated.  A MatrixMeter can be injected to observe that the
count never exceeds the fixed budget of 3.
"""
from __future__ import annotations

import numpy as np

from .circuit import Circuit, Slice
from .errors import CircuitError
from .gates import I2, P0, P1, tensor_product
from .state import Statevector


class MatrixMeter:
    """Counts full-size operator matrices currently alive during evolution."""

    def __init__(self):
        self.live = 0
        self.peak = 0

    def acquire(self):
        self.live += 1
        if self.live > self.peak:
            self.peak = self.live

    def release(self):
        self.live -= 1


def _chain(factors: list[np.ndarray], meter: MatrixMeter | None) -> np.ndarray:
    """Kronecker chain over per-wire 2x2 factors, bottom wire first.

    The result is a fresh full-size matrix and is accounted to the meter;
    the caller owns its release.
    """
    acc = factors[-1].copy()  # wire n-1 (bottom); copied so callers may mutate
    for w in range(len(factors) - 2, -1, -1):
        acc = tensor_product(acc, factors[w])
    if meter is not None:
        meter.acquire()
    return acc


def _basis_outer(i: int, j: int) -> np.ndarray:
    """|i><j| on one qubit."""
    m = np.zeros((2, 2), dtype=np.complex128)
    m[i, j] = 1.0
    return m


def slice_operator(slc: Slice, n_qubits: int, meter: MatrixMeter | None = None) -> np.ndarray:
    """Build the 2^n x 2^n operator for one slice.

    Plain slices are a single Kronecker chain of their slot gates.  A
    controlled slice expands as P0 (x) I  +  P1 (x) G across the control and
    target wires; a swap pair expands as the four |i><j| (x) |j><i| terms.
    The returned matrix is accounted to `meter`; the caller releases it.
    """
    if len(slc.slots) != n_qubits:
        raise CircuitError(f"slice has {len(slc.slots)} slots, expected {n_qubits}")
    kind, wires = slc.layout()

    if kind == "plain":
        return _chain([s.matrix() for s in slc.slots], meter)

    if kind == "controlled":
        control, target = wires
        factors = [s.matrix() if s.is_gate else I2 for s in slc.slots]
        idle = list(factors)
        idle[control] = P0
        idle[target] = I2
        acc = _chain(idle, meter)
        active = list(factors)
        active[control] = P1
        term = _chain(active, meter)
        acc += term
        if meter is not None:
            meter.release()  # term
        return acc

    # swap: sum_{i,j} |i><j|_a (x) |j><i|_b with identity elsewhere
    a, b = wires
    acc = None
    for i in (0, 1):
        for j in (0, 1):
            factors = [I2] * n_qubits
            factors[a] = _basis_outer(i, j)
            factors[b] = _basis_outer(j, i)
            term = _chain(factors, meter)
            if acc is None:
                acc = term
            else:
                acc += term
                if meter is not None:
                    meter.release()
    return acc


def evolve(circuit: Circuit, initial: Statevector | None = None,
           meter: MatrixMeter | None = None) -> Statevector:
    """Run the circuit: multiply the state by each slice operator in turn.

    `initial` defaults to |0...0>.  Pass a MatrixMeter to observe the
    live-operator count (peak stays <= 3 by construction).
    """
    if initial is None:
        initial = Statevector.zero(circuit.n_qubits)
    elif initial.n_qubits != circuit.n_qubits:
        raise CircuitError(
            f"initial state has {initial.n_qubits} qubits, circuit has {circuit.n_qubits}"
        )
    amps = initial.amps
    for slc in circuit.slices:
        op = slice_operator(slc, circuit.n_qubits, meter)
        amps = op @ amps
        del op
        if meter is not None:
            meter.release()
    return Statevector(circuit.n_qubits, amps)
