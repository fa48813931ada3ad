import numpy as np
import pytest

from qubitfx.sim import (
    CircuitError,
    entangler_circuit,
    entangler_state,
    evolve,
    probabilities,
)


def closed_form_probs(s: float) -> np.ndarray:
    half = np.pi * s / 2
    c2, s2 = np.cos(half) ** 2 / 2, np.sin(half) ** 2 / 2
    return np.array([c2, s2, s2, c2])


def test_s_zero_is_phi_plus():
    state = entangler_state(0.0)
    assert np.allclose(state.amps, np.array([1, 0, 0, 1]) / np.sqrt(2), atol=1e-12)


def test_s_one_is_psi_plus_magnitudes():
    assert np.allclose(probabilities(entangler_state(1.0)), [0, 0.5, 0.5, 0], atol=1e-12)


def test_s_half_is_uniform():
    assert np.allclose(probabilities(entangler_state(0.5)), [0.25] * 4, atol=1e-12)


def test_two_pi_periodicity():
    for s in (0.0, 0.3, 0.77, 1.4):
        assert np.allclose(
            probabilities(entangler_state(s)),
            probabilities(entangler_state(s + 2.0)),
            atol=1e-12,
        )


def test_fast_path_matches_slicewise_evolution():
    for s in np.linspace(-2.0, 4.0, 241):
        fast = entangler_state(s).amps
        general = evolve(entangler_circuit(s)).amps
        assert np.allclose(fast, general, atol=1e-12)


def test_probability_closed_form_grid():
    for s in np.linspace(0.0, 2.0, 1000):
        assert np.allclose(
            probabilities(entangler_state(s)), closed_form_probs(s), atol=1e-9
        )


def test_one_third_note_example():
    assert np.allclose(
        probabilities(entangler_state(1 / 3)), [0.375, 0.125, 0.125, 0.375], atol=1e-12
    )


def test_non_finite_input_rejected():
    with pytest.raises(CircuitError):
        entangler_state(float("inf"))
