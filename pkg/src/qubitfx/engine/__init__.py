"""Composition layer: mailbox/worker plumbing, CLI, and the live service."""
from .cli import build_parser, main, run_cli
from .mailbox import LatestValueMailbox
from .worker import QuantumWorker, produce_packed_bytes

__all__ = [
    "LatestValueMailbox",
    "QuantumWorker",
    "build_parser",
    "main",
    "produce_packed_bytes",
    "run_cli",
]
