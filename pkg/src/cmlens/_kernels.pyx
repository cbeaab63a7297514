# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels (see ``_kernels_py`` for semantics)."""

from libc.stdint cimport int64_t

import numpy as np
cimport numpy as cnp

cnp.import_array()

cdef int64_t NEG = -1


cdef void _add_item(const int64_t[:] row, int64_t[:] out, int64_t value,
                    bint exact) noexcept nogil:
    cdef Py_ssize_t m = row.shape[0] - 1
    cdef Py_ssize_t c, cost = 1
    cdef int64_t k = 1, gain, prev, cand
    for c in range(m + 1):
        out[c] = row[c]
    while cost <= m:
        gain = k * value
        for c in range(cost, m + 1):
            prev = row[c - cost]
            if exact and prev == NEG:
                continue
            cand = prev + gain
            if cand > out[c]:
                out[c] = cand
        k += 1
        cost += k


def add_item(row, value, exact=False):
    cdef cnp.ndarray[int64_t, ndim=1] src = np.asarray(row, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] out = np.empty_like(src)
    _add_item(src, out, value, exact)
    return out.tolist()


def empty_row(m, exact=False):
    if exact:
        return [0] + [-1] * m
    return [0] * (m + 1)


def t_sweep(entries, m, exact=False):
    cdef cnp.ndarray[int64_t, ndim=1] a = np.zeros(m + 1, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] b = np.empty(m + 1, dtype=np.int64)
    if exact:
        a[1:] = NEG
    for v in entries:
        _add_item(a, b, v, exact)
        a, b = b, a
    return a.tolist()


def plan_counts(m):
    # int64 holds the counts comfortably for m <= 3000; the dispatcher enforces it
    cdef cnp.ndarray[int64_t, ndim=1] ways = np.zeros(m + 1, dtype=np.int64)
    cdef int64_t[:] w_ = ways
    cdef Py_ssize_t c, w = 1, a = 1, mm = m
    w_[0] = 1
    with nogil:
        while w <= mm:
            for c in range(w, mm + 1):
                w_[c] += w_[c - w]
            a += 1
            w += a
    return ways.tolist()


def row_check(row, target, cap):
    cdef cnp.ndarray[int64_t, ndim=1] r_ = np.asarray(row, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] t_ = np.asarray(target, dtype=np.int64)
    cdef Py_ssize_t m, n = t_.shape[0]
    cdef int64_t c = cap, best = 0, cand
    for m in range(n):
        if r_[m] > t_[m]:
            return 1
        cand = r_[m] - m * c
        if m == 0 or cand > best:
            best = cand
        if best + m * c < t_[m]:
            return 2
    return 0
