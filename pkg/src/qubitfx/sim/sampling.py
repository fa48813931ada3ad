"""Measurement sampling: bucket distribution, random draws, bit packing.

The outcome distribution is an array of R buckets (R defaults to 100):
outcome j occupies floor(R * p_j) consecutive buckets.  Floor truncation can
leave up to m-1 buckets unassigned; those are handed out one per outcome in
descending-probability order (lowest index wins ties), appended at the end,
so every per-outcome count is floor(R*p) or floor(R*p) + 1 and the total is
exactly R.  Sampling is one uniform bucket pick from an injectable random
source (any object with randrange), which stands in for hardware entropy.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import floor

import numpy as np

from .entangler import entangler_state
from .errors import CircuitError
from .state import probabilities

DEFAULT_RESOLUTION = 100
_PROB_SUM_TOL = 1e-6

# Compensates representation fuzz before flooring, so a probability that is
# exactly k/R in real arithmetic (e.g. 0.25 at s = 0.5) lands on k slots
# instead of k-1 plus a leftover.
FLOOR_EPS = 1e-9


def slot_count(p: float, resolution: int) -> int:
    """floor(resolution * p), tolerant of float error just below an integer."""
    return floor(resolution * p + FLOOR_EPS)


@dataclass(frozen=True)
class OutcomeDistribution:
    resolution: int
    buckets: tuple[int, ...]

    def counts(self, n_outcomes: int) -> list[int]:
        out = [0] * n_outcomes
        for b in self.buckets:
            out[b] += 1
        return out


def build_distribution(probs, resolution: int = DEFAULT_RESOLUTION) -> OutcomeDistribution:
    probs = [float(p) for p in probs]
    if resolution < len(probs):
        raise CircuitError(
            f"resolution {resolution} is below the outcome count {len(probs)}"
        )
    if any(p < 0 or not np.isfinite(p) for p in probs):
        raise CircuitError("probabilities must be finite and non-negative")
    total = sum(probs)
    if abs(total - 1.0) > _PROB_SUM_TOL:
        raise CircuitError(f"probabilities sum to {total!r}, expected 1 within {_PROB_SUM_TOL}")

    counts = [slot_count(p, resolution) for p in probs]
    buckets = []
    for outcome, count in enumerate(counts):
        buckets.extend([outcome] * count)
    leftover = resolution - len(buckets)
    if leftover > 0:
        by_weight = sorted(range(len(probs)), key=lambda j: (-probs[j], j))
        buckets.extend(by_weight[:leftover])
    return OutcomeDistribution(resolution, tuple(buckets))


def sample(dist: OutcomeDistribution, rng) -> int:
    """Draw one outcome: a uniform bucket index resolved through the array."""
    return dist.buckets[rng.randrange(dist.resolution)]


def pack_outcomes(outcomes) -> int:
    """Pack four 2-bit outcomes into one byte, first outcome in the MSBs."""
    outcomes = list(outcomes)
    if len(outcomes) != 4:
        raise CircuitError(f"expected 4 outcomes, got {len(outcomes)}")
    packed = 0
    for o in outcomes:
        if not 0 <= o <= 3:
            raise CircuitError(f"outcome {o} is not a 2-bit value")
        packed = (packed << 2) | o
    return packed


class EntanglerByteSource:
    """Seeded packed-byte source: entangler state at s, measured four times.

    One packed_byte() call is the full pipeline of the live worker: state,
    probabilities, bucket distribution, four draws, MSB-first packing.  The
    last byte produced is kept for observers.
    """

    def __init__(self, seed: int | None = None, resolution: int = DEFAULT_RESOLUTION):
        self.rng = random.Random(seed)
        self.resolution = resolution
        self.last_byte: int | None = None

    def packed_byte(self, s: float) -> int:
        dist = build_distribution(probabilities(entangler_state(s)), self.resolution)
        b = pack_outcomes([sample(dist, self.rng) for _ in range(4)])
        self.last_byte = b
        return b
