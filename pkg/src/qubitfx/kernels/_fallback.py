"""Pure-Python reference implementation of the per-sample effect loops.

Semantics are fixed here and mirrored exactly by the compiled extension;
the parity test asserts bit-identical output between the two.

Shared conventions:
  * samples are signed 16-bit ints; one quantum byte drives each `hop`
    of samples (the last hop may be short)
  * rounding is half-away-from-zero, computed as truncate(|x| + 0.5) with
    the sign reapplied -- both implementations use this exact expression
    so their float behaviour cannot diverge
  * distortion offset: round(gain * (qbyte - 128) * 256), clamped add
  * crusher: the byte's high nibble h sets bit depth b = 1 + h, the low
    nibble l sets the hold length d = 1 + l; quantization truncates the
    magnitude's low 16 - b bits (toward zero), the hold counter restarts
    at each hop boundary, and gain crossfades dry against crushed
"""
from __future__ import annotations


def _iround(x: float) -> int:
    # half away from zero; int() truncates, so this is truncate(|x| + 0.5)
    return int(x + 0.5) if x >= 0 else -int(-x + 0.5)


def distort_into(src, qbytes, gain: float, hop: int, out) -> None:
    n = len(src)
    pos = 0
    for h in range(len(qbytes)):
        offset = _iround(gain * (int(qbytes[h]) - 128) * 256)
        end = min(pos + hop, n)
        while pos < end:
            v = int(src[pos]) + offset
            if v > 32767:
                v = 32767
            elif v < -32768:
                v = -32768
            out[pos] = v
            pos += 1


def crush_into(src, qbytes, gain: float, hop: int, out) -> None:
    n = len(src)
    dry_mix = 1.0 - gain
    pos = 0
    for h in range(len(qbytes)):
        q = int(qbytes[h])
        shift = 15 - (q >> 4)          # 16 - bit depth
        hold = 1 + (q & 0x0F)
        end = min(pos + hop, n)
        held = 0
        k = 0
        while pos < end:
            if k % hold == 0:
                v = int(src[pos])
                mag = (v >> shift << shift) if v >= 0 else -((-v) >> shift << shift)
                held = mag
            out[pos] = _iround(dry_mix * int(src[pos]) + gain * held)
            pos += 1
            k += 1
