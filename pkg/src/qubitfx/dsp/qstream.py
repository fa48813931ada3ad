"""Quantum byte streams: where the effects get their per-hop measurement
bytes.  Deterministic (seeded simulator), stubbed (fixed sequence), or live
(latest value from the worker mailbox, zero-order hold when nothing new has
arrived)."""
from __future__ import annotations

from ..sim import DEFAULT_RESOLUTION, EntanglerByteSource


class StubByteStream:
    """Cycles a fixed byte sequence; for tests and oracle comparisons."""

    def __init__(self, values):
        values = [int(v) for v in values]
        if not values:
            raise ValueError("stub stream needs at least one byte")
        for v in values:
            if not 0 <= v <= 255:
                raise ValueError(f"stub byte {v} out of 0..255")
        self._values = values
        self._i = 0

    def next_byte(self) -> int:
        v = self._values[self._i % len(self._values)]
        self._i += 1
        return v


class SimulatorByteStream:
    """One fresh packed measurement byte per call, from a seeded simulator.

    `s` may be reassigned between hops (the live rotation control).
    """

    def __init__(self, s: float = 0.0, seed: int | None = None,
                 resolution: int = DEFAULT_RESOLUTION):
        self.s = float(s)
        self._source = EntanglerByteSource(seed, resolution)

    def next_byte(self) -> int:
        return self._source.packed_byte(self.s)


class MailboxByteStream:
    """Reads the freshest worker byte; repeats the last one when the worker
    has not produced since (zero-order hold).  Never blocks."""

    def __init__(self, mailbox, initial: int = 128):
        self._mailbox = mailbox
        self._last = int(initial)
        self.last_seq = 0

    def next_byte(self) -> int:
        value, seq = self._mailbox.latest()
        if value is not None:
            self._last = int(value)
            self.last_seq = seq
        return self._last
