import json
import time

import numpy as np
import pytest

from websockets.sync.client import connect

from qubitfx.engine.service import LiveSession, SessionConfig, bound_port, start_server


@pytest.fixture()
def server():
    config = SessionConfig(port=0, seed=1)
    srv, thread = start_server(config)
    try:
        yield f"ws://127.0.0.1:{bound_port(srv)}"
    finally:
        srv.shutdown()
        thread.join(timeout=5.0)


def send_recv(ws, frame: dict) -> dict:
    ws.send(json.dumps(frame))
    return json.loads(ws.recv(timeout=5.0))


def test_set_s_zero_returns_bell_probs(server):
    with connect(server) as ws:
        reply = send_recv(ws, {"t": "setS", "s": 0})
        assert reply["t"] == "probs"
        assert np.allclose(reply["p"], [0.5, 0, 0, 0.5], atol=1e-9)


def test_set_s_half_returns_uniform_probs(server):
    with connect(server) as ws:
        reply = send_recv(ws, {"t": "setS", "s": 0.5})
        assert np.allclose(reply["p"], [0.25] * 4, atol=1e-9)


def test_note_on_returns_qbyte_then_qnote_in_shift_range(server):
    with connect(server) as ws:
        first = send_recv(ws, {"t": "noteOn", "note": 60, "vel": 96})
        assert first["t"] == "qbyte" and 0 <= first["v"] <= 255
        qnote = json.loads(ws.recv(timeout=5.0))
        assert qnote["t"] == "qnote"
        assert 60 <= qnote["note"] <= 84
        assert qnote["vel"] == 96
        assert qnote["ttlMs"] == 2000.0


def test_malformed_and_unknown_frames_keep_session_alive(server):
    with connect(server) as ws:
        ws.send("this is not json")
        assert json.loads(ws.recv(timeout=5.0))["t"] == "err"
        reply = send_recv(ws, {})
        assert reply["t"] == "err"
        reply = send_recv(ws, {"t": "setGain", "g": 7})
        assert reply["t"] == "err"
        # the session still works afterwards
        reply = send_recv(ws, {"t": "setS", "s": 0})
        assert reply["t"] == "probs"


def test_patch_frame_returns_framed_sysex(server):
    with connect(server) as ws:
        send_recv(ws, {"t": "noteOn", "note": 64, "vel": 80})
        ws.recv(timeout=5.0)  # drain the qnote frame
        reply = send_recv(ws, {"t": "patch"})
        assert reply["t"] == "sysex"
        data = reply["bytes"]
        assert data[0] == 0xF0 and data[-1] == 0xF7
        assert all(b < 0x80 for b in data[1:-1])


def test_scripted_transcripts_are_identical_across_sessions(server):
    script = [
        {"t": "setS", "s": 0.25},
        {"t": "noteOn", "note": 62, "vel": 100},
        {"t": "noteOn", "note": 65, "vel": 90},
        {"t": "setGain", "g": 0.9},
        {"t": "patch"},
        {"t": "setS", "s": 1.5},
    ]

    def run_session():
        transcript = []
        with connect(server) as ws:
            for frame in script:
                ws.send(json.dumps(frame))
            # responses: 1 per setS/setGain/patch, 2 per noteOn
            for _ in range(4 + 2 * 2):
                transcript.append(ws.recv(timeout=5.0))
        return transcript

    assert run_session() == run_session()


def test_probs_refresh_continues_under_note_traffic():
    config = SessionConfig(port=0, seed=1, keepalive_s=0.2)
    srv, thread = start_server(config)
    try:
        with connect(f"ws://127.0.0.1:{bound_port(srv)}") as ws:
            seen = []
            deadline = time.monotonic() + 1.0
            note = 60
            while time.monotonic() < deadline:
                ws.send(json.dumps({"t": "noteOn", "note": note, "vel": 80}))
                note = 60 + (note - 59) % 12
                for _ in range(2):  # qbyte + qnote
                    seen.append(json.loads(ws.recv(timeout=5.0))["t"])
                while True:  # drain any interleaved refresher frames
                    try:
                        seen.append(json.loads(ws.recv(timeout=0.01))["t"])
                    except TimeoutError:
                        break
                time.sleep(0.02)
            assert "probs" in seen  # bars keep refreshing while notes stream
    finally:
        srv.shutdown()
        thread.join(timeout=5.0)


def test_keepalive_probs_arrive_when_idle():
    config = SessionConfig(port=0, seed=1, keepalive_s=0.1)
    srv, thread = start_server(config)
    try:
        with connect(f"ws://127.0.0.1:{bound_port(srv)}") as ws:
            frame = json.loads(ws.recv(timeout=5.0))
            assert frame["t"] == "probs"
            assert np.allclose(frame["p"], [0.5, 0, 0, 0.5], atol=1e-9)  # s starts at 0
    finally:
        srv.shutdown()
        thread.join(timeout=5.0)


def test_sessions_have_independent_state(server):
    with connect(server) as ws1, connect(server) as ws2:
        send_recv(ws1, {"t": "setS", "s": 1.0})
        # the second session still sits at its own s = 0
        reply = send_recv(ws2, {"t": "setS", "s": 0.0})
        assert np.allclose(reply["p"], [0.5, 0, 0, 0.5], atol=1e-9)


def test_session_config_validation():
    with pytest.raises(ValueError):
        SessionConfig(listen_channel=16)
    with pytest.raises(ValueError):
        SessionConfig(qnote_ttl_ms=0)
    with pytest.raises(ValueError):
        SessionConfig(resolution=2)
    with pytest.raises(ValueError):
        SessionConfig(port=70000)


def test_live_session_unit_level_note_flow():
    session = LiveSession(SessionConfig(seed=5), clock=lambda: 0.0)
    frames = session.handle({"t": "noteOn", "note": 60, "vel": 96})
    kinds = [f["t"] for f in frames]
    assert kinds == ["qbyte", "qnote"]
    assert frames[1]["note"] - 60 in range(0, 25)
