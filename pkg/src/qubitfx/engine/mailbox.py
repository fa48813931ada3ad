"""Latest-value mailbox: the only bridge between the path thread and the
quantum worker.

Single slot, lossy by design: the writer always overwrites, the reader
always gets the freshest (value, seq) pair and never waits.  A slow reader
sees sequence numbers jump; it never sees them go backwards and never
blocks.  One writer thread is assumed; publication is a single reference
assignment, atomic under the GIL.
"""
from __future__ import annotations

from typing import Generic, TypeVar

T = TypeVar("T")

_EMPTY = (None, 0)


class LatestValueMailbox(Generic[T]):
    __slots__ = ("_cell",)

    def __init__(self):
        self._cell: tuple[T | None, int] = _EMPTY

    def post(self, value: T) -> int:
        """Publish a value (writer side, non-blocking); returns its seq."""
        seq = self._cell[1] + 1
        self._cell = (value, seq)
        return seq

    def latest(self) -> tuple[T | None, int]:
        """Freshest (value, seq); (None, 0) before the first post."""
        return self._cell
