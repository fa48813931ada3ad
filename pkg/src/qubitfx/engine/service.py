"""Live WebSocket service for the browser instrument.

JSON text frames.  Client to server:

    {"t": "noteOn", "note": 60, "vel": 96}
    {"t": "noteOff", "note": 60}
    {"t": "setS", "s": 0.5}
    {"t": "setGain", "g": 0.7}
    {"t": "patch"}

Server to client:

    {"t": "qnote", "note": 70, "vel": 96, "ttlMs": 2000}
    {"t": "probs", "p": [..4 reals..]}    on every s change and >= 1 Hz
    {"t": "qbyte", "v": 108}              the byte behind the last q-note
    {"t": "sysex", "bytes": [...]}        generated patch
    {"t": "err", "msg": "..."}            bad frame; the session survives

Each connection gets an independent session seeded from the config, so a
scripted client transcript replays to an identical server transcript.
"""
from __future__ import annotations

import json
import logging
import math
import threading
import time
from collections import deque
from dataclasses import dataclass

from websockets.exceptions import ConnectionClosed
from websockets.sync.server import serve as ws_serve

from ..midi import (
    AccompanimentState,
    MessageKind,
    load_template,
    generate_patch,
    note_on,
    note_to_s,
    process_message,
    serialize,
)
from ..sim import (
    DEFAULT_RESOLUTION,
    EntanglerByteSource,
    entangler_state,
    probabilities,
)

log = logging.getLogger(__name__)


@dataclass
class SessionConfig:
    host: str = "127.0.0.1"
    port: int = 8765
    seed: int | None = None
    listen_channel: int = 0
    qnote_channel: int | None = None
    qnote_ttl_ms: float = 2000.0
    resolution: int = DEFAULT_RESOLUTION
    keepalive_s: float = 1.0
    patch_template_path: str | None = None
    initial_s: float = 0.0
    initial_gain: float = 0.5

    def __post_init__(self):
        if not math.isfinite(self.initial_s):
            raise ValueError("initial s must be finite")
        if not 0.0 <= self.initial_gain <= 1.0:
            raise ValueError(f"initial gain {self.initial_gain} out of 0..1")
        if not 0 <= self.listen_channel <= 15:
            raise ValueError(f"listen channel {self.listen_channel} out of 0..15")
        if self.qnote_channel is not None and not 0 <= self.qnote_channel <= 15:
            raise ValueError(f"q-note channel {self.qnote_channel} out of 0..15")
        if self.qnote_ttl_ms <= 0:
            raise ValueError("q-note TTL must be positive")
        if self.resolution < 4:
            raise ValueError("resolution must cover the 4 outcomes")
        if not 0 <= self.port <= 65535:
            raise ValueError(f"port {self.port} out of range")
        if self.keepalive_s <= 0:
            raise ValueError("keepalive period must be positive")


class LiveSession:
    """State for one connected client: knobs, accompaniment, patch memory."""

    def __init__(self, config: SessionConfig, clock=time.monotonic):
        self.config = config
        self.s = config.initial_s
        self.gain = config.initial_gain
        self._clock = clock
        self._source = EntanglerByteSource(config.seed, config.resolution)
        self._accomp = AccompanimentState(
            source=self._source,
            listen_channel=config.listen_channel,
            qnote_channel=config.qnote_channel,
            qnote_ttl_ms=config.qnote_ttl_ms,
        )
        self._template = load_template(config.patch_template_path)
        self._recent_s: deque[float] = deque(maxlen=8)

    def _probs_frame(self) -> dict:
        p = probabilities(entangler_state(self.s))
        return {"t": "probs", "p": [float(x) for x in p]}

    def keepalive(self) -> list[dict]:
        return [self._probs_frame()]

    def handle(self, frame: dict) -> list[dict]:
        kind = frame.get("t")
        if kind == "setS":
            value = frame.get("s")
            if not isinstance(value, (int, float)) or value != value:
                return [{"t": "err", "msg": "setS needs a finite number s"}]
            self.s = float(value)
            return [self._probs_frame()]
        if kind == "setGain":
            value = frame.get("g")
            if not isinstance(value, (int, float)) or not 0.0 <= float(value) <= 1.0:
                return [{"t": "err", "msg": "setGain needs g in 0..1"}]
            self.gain = float(value)
            return [self._probs_frame()]
        if kind == "noteOn":
            return self._note_on(frame)
        if kind == "noteOff":
            return []  # pass-through only; the client ends its own tones
        if kind == "patch":
            return self._patch()
        return [{"t": "err", "msg": f"unknown message type {kind!r}"}]

    def _note_on(self, frame: dict) -> list[dict]:
        note = frame.get("note")
        vel = frame.get("vel", 96)
        if not isinstance(note, int) or not 0 <= note <= 127:
            return [{"t": "err", "msg": "noteOn needs note in 0..127"}]
        if not isinstance(vel, int) or not 1 <= vel <= 127:
            return [{"t": "err", "msg": "noteOn needs vel in 1..127"}]
        now_ms = self._clock() * 1000.0
        emitted = process_message(
            self._accomp, note_on(self.config.listen_channel, note, vel), now_ms
        )
        self._recent_s.append(note_to_s(note))
        out: list[dict] = [{"t": "qbyte", "v": self._source.last_byte}]
        for msg in emitted[1:]:  # skip the pass-through echo of the input
            if msg.kind is MessageKind.NOTE_ON:
                out.append({"t": "qnote", "note": msg.data1, "vel": msg.data2,
                            "ttlMs": self.config.qnote_ttl_ms})
        return out

    def _patch(self) -> list[dict]:
        s_values = list(self._recent_s) or [self.s]
        needed = len(self._template.quantum_fields())
        qbytes = [self._source.packed_byte(s_values[i % len(s_values)])
                  for i in range(needed)]
        message = generate_patch(self._template, qbytes)
        return [{"t": "sysex", "bytes": list(serialize(message))}]


def _session_handler(config: SessionConfig):
    def handler(connection) -> None:
        session = LiveSession(config)
        peer = connection.remote_address
        log.info("session opened: %s", peer)
        last_probs = time.monotonic()
        try:
            while True:
                try:
                    raw = connection.recv(timeout=config.keepalive_s)
                    try:
                        parsed = json.loads(raw)
                        if not isinstance(parsed, dict):
                            raise ValueError("frame must be a JSON object")
                        replies = session.handle(parsed)
                    except (ValueError, TypeError) as exc:
                        replies = [{"t": "err", "msg": f"malformed frame: {exc}"}]
                except TimeoutError:
                    replies = []
                # distribution refresher: at least one probs frame per
                # keepalive period, busy or idle
                if (time.monotonic() - last_probs >= config.keepalive_s
                        and not any(f.get("t") == "probs" for f in replies)):
                    replies = list(replies) + session.keepalive()
                for frame in replies:
                    if frame.get("t") == "probs":
                        last_probs = time.monotonic()
                    connection.send(json.dumps(frame))
        except ConnectionClosed:
            log.info("session closed: %s", peer)

    return handler


def start_server(config: SessionConfig):
    """Bind and return the server plus its thread; caller calls shutdown().

    With port 0 the OS picks a free port; read it back from the returned
    server's socket.
    """
    server = ws_serve(_session_handler(config), config.host, config.port)
    thread = threading.Thread(target=server.serve_forever,
                              name="qubitfx-serve", daemon=True)
    thread.start()
    return server, thread


def bound_port(server) -> int:
    return server.socket.getsockname()[1]


def serve_forever(config: SessionConfig) -> None:
    with ws_serve(_session_handler(config), config.host, config.port) as server:
        print(f"serving ws://{config.host}:{bound_port(server)}")
        server.serve_forever()
