"""Single-qubit gate matrices and the Kronecker (tensor) product.

Wire convention used throughout the simulator: wire 0 is the top wire and
holds the least-significant bit of an outcome index.  A whole-slice operator
is therefore built bottom wire first: ``tensor_product(bottom, ..., top)``.
"""
from __future__ import annotations

from math import cos, pi, sin, sqrt

import numpy as np

from .errors import CapacityError

MAX_QUBITS = 4
MAX_DIM = 2 ** MAX_QUBITS

_SQRT2_INV = 1 / sqrt(2)

I2 = np.eye(2, dtype=np.complex128)
X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
H = np.array([[1, 1], [1, -1]], dtype=np.complex128) * _SQRT2_INV
S = np.array([[1, 0], [0, 1j]], dtype=np.complex128)
T = np.array([[1, 0], [0, np.exp(1j * pi / 4)]], dtype=np.complex128)

# Projectors used to expand controlled gates.
P0 = np.array([[1, 0], [0, 0]], dtype=np.complex128)
P1 = np.array([[0, 0], [0, 1]], dtype=np.complex128)


def rx_matrix(theta: float) -> np.ndarray:
    """Rotation about the X axis: [[cos(t/2), -i sin(t/2)], [-i sin(t/2), cos(t/2)]]."""
    c, s = cos(theta / 2), sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product a (x) b, where `a` acts on the higher-indexed wires.

    Raises CapacityError when the result would exceed the fixed 16x16 budget.
    """
    dim = a.shape[0] * b.shape[0]
    if dim > MAX_DIM:
        raise CapacityError(
            f"operator of dimension {dim} exceeds the {MAX_DIM}x{MAX_DIM} capacity"
        )
    return np.kron(a, b)
