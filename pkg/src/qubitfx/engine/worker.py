"""The quantum worker: the second-core analogue.

Loops simulate -> sample -> pack -> post, reading the current rotation
input from a parameters cell and publishing packed bytes to the output
mailbox.  The audio/MIDI path never calls the simulator inline; it only
reads the mailbox.  Faults are logged and the loop carries on.
"""
from __future__ import annotations

import logging
import threading
import time

from ..sim import DEFAULT_RESOLUTION, EntanglerByteSource
from .mailbox import LatestValueMailbox

log = logging.getLogger(__name__)


class QuantumWorker(threading.Thread):
    """Continuously produces packed measurement bytes.

    `params` carries the current s (a float posted by the path thread);
    `interval` throttles production (0 = uncapped), mainly so tests can
    model a slow simulator.
    """

    def __init__(self, params: LatestValueMailbox, out: LatestValueMailbox,
                 seed: int | None = None, resolution: int = DEFAULT_RESOLUTION,
                 interval: float = 0.0):
        super().__init__(name="quantum-worker", daemon=True)
        self.params = params
        self.out = out
        self.interval = interval
        self._source = EntanglerByteSource(seed, resolution)
        self._stop_event = threading.Event()

    def run(self) -> None:
        while not self._stop_event.is_set():
            try:
                s, _ = self.params.latest()
                byte = self._source.packed_byte(float(s) if s is not None else 0.0)
                self.out.post(byte)
            except Exception:
                log.exception("quantum worker fault; restarting loop")
            if self.interval:
                self._stop_event.wait(self.interval)

    def stop(self, join: bool = True) -> None:
        self._stop_event.set()
        if join and self.is_alive():
            self.join(timeout=5.0)


def produce_packed_bytes(source: EntanglerByteSource, s: float, count: int) -> list[int]:
    """Deterministic batch: exactly `count` packed bytes at a fixed s."""
    return [source.packed_byte(s) for _ in range(count)]
