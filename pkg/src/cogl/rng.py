"""Deterministic, position-addressable standard-normal stream.

The generator is part of the package's external interface: any implementation
following the definition below reproduces the same doubles bit-for-bit, which
is what makes every seeded operation in this package independent of call
chunking, evaluation order, and thread count.

Definition
----------
All integer arithmetic is unsigned 64-bit, wrapping modulo 2**64.

1. The uniform source is splitmix64. With state initialised to ``seed``, the
   n-th raw draw (n = 1, 2, ...) is ``mix(seed + n*GOLDEN)`` where
   ``GOLDEN = 0x9E3779B97F4A7C15`` and ``mix`` is the splitmix64 finaliser::

       z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
       z ^= z >> 27;  z *= 0x94D049BB133111EB
       z ^= z >> 31

   Because draw n is a pure function of (seed, n), any subsequence can be
   produced without generating its predecessors.

2. Normal deviates come from the Box-Muller transform, two per uniform pair.
   Pair p (p = 0, 1, ...) consumes raw draws 2p+1 and 2p+2 and yields normals
   at stream indices 2p and 2p+1::

       u1 = ((draw(2p+1) >> 11) + 1) * 2.0**-53     # in (0, 1]
       u2 =  (draw(2p+2) >> 11)      * 2.0**-53     # in [0, 1)
       r  = sqrt(-2 * log(u1))
       normal(2p)   = r * cos(2*pi*u2)
       normal(2p+1) = r * sin(2*pi*u2)

   The +1 on u1 keeps log() off zero; the 53-bit mantissa extraction makes the
   uniforms exactly representable.

The transcendental calls are evaluated by scalar libm through a serial
compiled kernel, so index i always receives the identical instruction
sequence regardless of how many indices the surrounding call requests.
"""

import numpy as np
from numba import njit

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_TWO_PI = 2.0 * np.pi
_INV_2_53 = 2.0 ** -53

_U1 = np.uint64(1)
_U2 = np.uint64(2)
_U11 = np.uint64(11)
_U27 = np.uint64(27)
_U30 = np.uint64(30)
_U31 = np.uint64(31)


@njit(cache=True, inline="always")
def _mix(z):
    z = (z ^ (z >> _U30)) * _MIX1
    z = (z ^ (z >> _U27)) * _MIX2
    return z ^ (z >> _U31)


@njit(cache=True, inline="always")
def _bm_pair(seed, p):
    # raw splitmix64 draws 2p+1 and 2p+2 feed Box-Muller pair p
    t1 = _mix(seed + (_U2 * p + _U1) * GOLDEN)
    t2 = _mix(seed + (_U2 * p + _U2) * GOLDEN)
    u1 = (np.float64(t1 >> _U11) + 1.0) * _INV_2_53
    u2 = np.float64(t2 >> _U11) * _INV_2_53
    r = np.sqrt(-2.0 * np.log(u1))
    ang = _TWO_PI * u2
    return r * np.cos(ang), r * np.sin(ang)


@njit(cache=True)
def _fill_normals(seed, start, out):
    n = out.shape[0]
    if n == 0:
        return
    p = start >> _U1
    i = 0
    if start & _U1:
        za, zb = _bm_pair(seed, p)
        out[0] = zb
        i = 1
        p += _U1
    while i + 2 <= n:
        za, zb = _bm_pair(seed, p)
        out[i] = za
        out[i + 1] = zb
        i += 2
        p += _U1
    if i < n:
        za, zb = _bm_pair(seed, p)
        out[i] = za


def check_seed(seed) -> int:
    """Validate and return a seed as a plain int in [0, 2**64)."""
    s = int(seed)
    if s != seed:
        raise ValueError(f"seed must be an integer, got {seed!r}")
    if not 0 <= s < 2 ** 64:
        raise ValueError(f"seed must be in [0, 2**64), got {s}")
    return s


def normals(seed, start: int, count: int) -> np.ndarray:
    """Standard-normal deviates at stream indices [start, start+count).

    Pure function of (seed, index): the value at a given index never depends
    on start, count, or previous calls.
    """
    s = check_seed(seed)
    if start < 0 or count < 0:
        raise ValueError("start and count must be non-negative")
    out = np.empty(count, dtype=np.float64)
    _fill_normals(np.uint64(s), np.uint64(start), out)
    return out
