# cython: language_level=3
"""Compiled twin of cyclosum._kernel.pure.

Same five entry points, same semantics.  Values stay arbitrary-precision
Python ints (the coefficients routinely outgrow 64 bits), so the win here
comes from typed index arithmetic and preallocated lists rather than from
C integer math.
"""
from math import gcd


def conv(a, b):
    """Dense convolution of two coefficient vectors."""
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t i, j
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        for j in range(lb):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def reduce_cyclo(c, rows, d):
    """Fold coefficients at index >= d back below d via precomputed rows."""
    cdef Py_ssize_t lc = len(c)
    cdef Py_ssize_t dd = d
    cdef Py_ssize_t i, j, top
    out = [0] * dd
    top = lc if lc < dd else dd
    for j in range(top):
        out[j] = c[j]
    for i in range(dd, lc):
        ci = c[i]
        if not ci:
            continue
        row = rows[i - dd]
        for j in range(dd):
            rj = row[j]
            if rj:
                out[j] = out[j] + ci * rj
    return out


def vec_lincomb(a, b, x, y):
    """Elementwise x*a + y*b for equal-length vectors."""
    cdef Py_ssize_t i, la = len(a)
    out = [0] * la
    for i in range(la):
        out[i] = x * a[i] + y * b[i]
    return out


def vec_scale(a, x):
    """Elementwise x*a."""
    cdef Py_ssize_t i, la = len(a)
    out = [0] * la
    for i in range(la):
        out[i] = x * a[i]
    return out


def vec_content(nums, den):
    """gcd of den and every numerator (den itself when all numerators vanish)."""
    g = den
    for v in nums:
        if v:
            g = gcd(g, v)
            if g == 1:
                return 1
    return g
