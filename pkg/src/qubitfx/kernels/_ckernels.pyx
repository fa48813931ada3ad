# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled per-sample effect loops.

Bit-identical twin of _fallback.py -- keep the two in lockstep.  Rounding
is truncate(|x| + 0.5) with the sign reapplied, written as the exact same
double expression as the Python version.
"""


cdef inline long long _iround(double x) nogil:
    if x >= 0:
        return <long long>(x + 0.5)
    return -(<long long>(-x + 0.5))


def distort_into(const short[:] src, const unsigned char[:] qbytes,
                 double gain, Py_ssize_t hop, short[:] out):
    cdef Py_ssize_t n = src.shape[0]
    cdef Py_ssize_t n_hops = qbytes.shape[0]
    cdef Py_ssize_t pos = 0, end, h
    cdef long long offset, v
    with nogil:
        for h in range(n_hops):
            offset = _iround(gain * (qbytes[h] - 128) * 256)
            end = pos + hop
            if end > n:
                end = n
            while pos < end:
                v = src[pos] + offset
                if v > 32767:
                    v = 32767
                elif v < -32768:
                    v = -32768
                out[pos] = <short>v
                pos += 1


def crush_into(const short[:] src, const unsigned char[:] qbytes,
               double gain, Py_ssize_t hop, short[:] out):
    cdef Py_ssize_t n = src.shape[0]
    cdef Py_ssize_t n_hops = qbytes.shape[0]
    cdef Py_ssize_t pos = 0, end, h, k
    cdef double dry_mix = 1.0 - gain
    cdef int q, shift, hold
    cdef long long v, mag, held
    with nogil:
        for h in range(n_hops):
            q = qbytes[h]
            shift = 15 - (q >> 4)
            hold = 1 + (q & 0x0F)
            end = pos + hop
            if end > n:
                end = n
            held = 0
            k = 0
            while pos < end:
                if k % hold == 0:
                    v = src[pos]
                    if v >= 0:
                        mag = (v >> shift) << shift
                    else:
                        mag = -(((-v) >> shift) << shift)
                    held = mag
                out[pos] = <short>_iround(dry_mix * src[pos] + gain * held)
                pos += 1
                k += 1
