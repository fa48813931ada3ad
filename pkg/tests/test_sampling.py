import random
from collections import Counter

import pytest

from oracles import SequenceRng, oracle_bucket_counts
from qubitfx.sim import (
    CircuitError,
    EntanglerByteSource,
    build_distribution,
    entangler_state,
    pack_outcomes,
    probabilities,
    sample,
)
from qubitfx.sim.sampling import slot_count


def random_prob_vector(rng: random.Random, n: int = 4) -> list[float]:
    if rng.random() < 0.2:
        # spiky vectors with exact zeros
        weights = [rng.choice([0.0, rng.random()]) for _ in range(n)]
        if not any(weights):
            weights[rng.randrange(n)] = 1.0
    else:
        weights = [rng.random() for _ in range(n)]
    total = sum(weights)
    return [w / total for w in weights]


def test_bell_distribution_buckets():
    dist = build_distribution([0.5, 0.0, 0.0, 0.5], 100)
    assert dist.buckets == (0,) * 50 + (3,) * 50


def test_uniform_state_fills_buckets_evenly():
    # float fuzz around 0.25 must not shift any slot to a leftover
    dist = build_distribution(probabilities(entangler_state(0.5)), 100)
    assert dist.counts(4) == [25, 25, 25, 25]


def test_certain_outcome_fills_all_buckets():
    dist = build_distribution([1.0, 0.0, 0.0, 0.0], 100)
    assert dist.buckets == (0,) * 100


def test_leftover_goes_to_largest_probability_lowest_index():
    dist = build_distribution([1 / 3, 1 / 3, 1 / 3, 0.0], 100)
    assert dist.counts(4) == [34, 33, 33, 0]
    assert dist.buckets[99] == 0  # leftover slot appended at the end


def test_multiple_leftovers_spread_one_per_outcome():
    # floors are 35, 35, 14, 14 -> two leftovers, one each to outcomes 0 and 1
    dist = build_distribution([0.355, 0.355, 0.145, 0.145], 100)
    assert dist.counts(4) == [36, 36, 14, 14]


def test_counts_match_bruteforce_oracle():
    rng = random.Random(23)
    for _ in range(500):
        probs = random_prob_vector(rng)
        resolution = rng.choice([100, 100, 100, 64, 250])
        dist = build_distribution(probs, resolution)
        assert dist.counts(4) == oracle_bucket_counts(probs, resolution)


def test_counts_within_floor_plus_one_and_total_exact():
    rng = random.Random(29)
    for _ in range(500):
        probs = random_prob_vector(rng)
        dist = build_distribution(probs, 100)
        counts = dist.counts(4)
        assert sum(counts) == 100
        for p, c in zip(probs, counts):
            assert c in (slot_count(p, 100), slot_count(p, 100) + 1)


def test_resolution_below_outcomes_rejected():
    with pytest.raises(CircuitError):
        build_distribution([0.25] * 4, 3)


def test_bad_probability_vectors_rejected():
    with pytest.raises(CircuitError):
        build_distribution([0.7, 0.7, 0.0, 0.0])
    with pytest.raises(CircuitError):
        build_distribution([-0.1, 0.6, 0.3, 0.2])


def test_sample_only_returns_bell_outcomes():
    dist = build_distribution([0.5, 0.0, 0.0, 0.5], 100)
    outcomes = {sample(dist, SequenceRng([i])) for i in range(100)}
    assert outcomes == {0, 3}


def test_enumerated_rng_reproduces_counts_exactly():
    rng = random.Random(31)
    for _ in range(50):
        probs = random_prob_vector(rng)
        dist = build_distribution(probs, 100)
        drawn = Counter(sample(dist, SequenceRng([i])) for i in range(100))
        assert [drawn.get(j, 0) for j in range(4)] == dist.counts(4)


def test_seeded_sampling_frequencies_at_s_half():
    dist = build_distribution(probabilities(entangler_state(0.5)), 100)
    rng = random.Random(5)
    tally = Counter(sample(dist, rng) for _ in range(100_000))
    for outcome in range(4):
        assert abs(tally[outcome] / 100_000 - 0.25) < 0.01


def test_pack_outcomes():
    assert pack_outcomes([3, 3, 3, 3]) == 0xFF
    assert pack_outcomes([0, 0, 0, 0]) == 0x00
    assert pack_outcomes([1, 2, 3, 0]) == 0x6C


def test_pack_outcomes_validation():
    with pytest.raises(CircuitError):
        pack_outcomes([1, 2, 3])
    with pytest.raises(CircuitError):
        pack_outcomes([1, 2, 3, 4])


def test_byte_source_is_seed_deterministic():
    a = EntanglerByteSource(seed=42)
    b = EntanglerByteSource(seed=42)
    seq_a = [a.packed_byte(0.4) for _ in range(32)]
    seq_b = [b.packed_byte(0.4) for _ in range(32)]
    assert seq_a == seq_b
    assert a.last_byte == seq_a[-1]


def test_byte_source_bit_pairs_follow_state():
    src = EntanglerByteSource(seed=1)
    for _ in range(64):
        b = src.packed_byte(0.0)  # Bell state: pairs are 00 or 11
        pairs = [(b >> sh) & 3 for sh in (6, 4, 2, 0)]
        assert set(pairs) <= {0, 3}
    for _ in range(64):
        b = src.packed_byte(1.0)  # |01>/|10> state: pairs are 01 or 10
        pairs = [(b >> sh) & 3 for sh in (6, 4, 2, 0)]
        assert set(pairs) <= {1, 2}
