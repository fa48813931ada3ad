import numpy as np
import pytest

from qubitfx.sim import CapacityError, rx_matrix, tensor_product
from qubitfx.sim.gates import H, I2, X


def test_identity_tensor_h_is_block_diagonal():
    got = tensor_product(I2, H)
    expected = np.zeros((4, 4), dtype=complex)
    expected[:2, :2] = H
    expected[2:, 2:] = H
    assert np.allclose(got, expected)


def test_identity_tensor_identity():
    assert np.allclose(tensor_product(I2, I2), np.eye(4))


def test_h_tensor_h_entries_are_half():
    # Hand-expanded Kronecker product: every entry +/- 1/2.
    expected = 0.5 * np.array(
        [
            [1, 1, 1, 1],
            [1, -1, 1, -1],
            [1, 1, -1, -1],
            [1, -1, -1, 1],
        ],
        dtype=complex,
    )
    assert np.allclose(tensor_product(H, H), expected)


def test_left_factor_is_bottom_wire():
    # I (x) H applies H to the top wire: |00> -> (|00> + |01>)/sqrt(2).
    psi = tensor_product(I2, H) @ np.array([1, 0, 0, 0], dtype=complex)
    assert np.allclose(psi, np.array([1, 1, 0, 0]) / np.sqrt(2))


def test_capacity_error_beyond_16():
    u16 = np.eye(16, dtype=complex)
    with pytest.raises(CapacityError):
        tensor_product(u16, I2)
    with pytest.raises(CapacityError):
        tensor_product(I2, u16)


def test_rx_matrix_values():
    assert np.allclose(rx_matrix(0.0), np.eye(2))
    assert np.allclose(rx_matrix(np.pi), np.array([[0, -1j], [-1j, 0]]))
    got = rx_matrix(np.pi / 2)
    r = 1 / np.sqrt(2)
    assert np.allclose(got, np.array([[r, -1j * r], [-1j * r, r]]))


def test_x_is_rx_pi_up_to_phase():
    assert np.allclose(1j * rx_matrix(np.pi), X)
