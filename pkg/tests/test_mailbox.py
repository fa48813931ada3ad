import threading
import time

from qubitfx.engine import LatestValueMailbox


def test_empty_mailbox_reads_none():
    box = LatestValueMailbox()
    assert box.latest() == (None, 0)


def test_post_and_latest():
    box = LatestValueMailbox()
    assert box.post(42) == 1
    assert box.latest() == (42, 1)
    box.post(43)
    assert box.latest() == (43, 2)


def test_reader_sees_monotone_sequence_under_stress():
    box = LatestValueMailbox()
    stop = threading.Event()
    errors: list[str] = []

    def writer():
        i = 0
        while not stop.is_set():
            box.post(i)
            i += 1

    def reader():
        last_seq = 0
        last_value = -1
        while not stop.is_set():
            value, seq = box.latest()
            if seq < last_seq:
                errors.append(f"sequence went backwards: {seq} < {last_seq}")
            if value is not None and seq > last_seq and value <= last_value:
                errors.append(f"fresh seq {seq} carried stale value {value}")
            if value is not None:
                last_value = value
            last_seq = seq

    w = threading.Thread(target=writer)
    r = threading.Thread(target=reader)
    w.start(); r.start()
    time.sleep(0.5)
    stop.set()
    w.join(); r.join()
    assert errors == []
    value, seq = box.latest()
    assert value == seq - 1  # every post was observed in order by seq


def test_slow_reader_skips_values_but_never_stalls():
    box = LatestValueMailbox()
    for i in range(1000):
        box.post(i)
    value, seq = box.latest()
    assert (value, seq) == (999, 1000)  # intermediate values were lost, not queued


def test_read_is_time_bounded_while_writer_spins():
    box = LatestValueMailbox()
    stop = threading.Event()

    def spin_writer():
        i = 0
        while not stop.is_set():
            box.post(i)
            i += 1

    w = threading.Thread(target=spin_writer)
    w.start()
    time.sleep(0.05)
    t0 = time.perf_counter()
    for _ in range(10_000):
        box.latest()
    per_read = (time.perf_counter() - t0) / 10_000
    stop.set()
    w.join()
    assert per_read < 1e-4  # reads stay sub-100us even under write pressure
