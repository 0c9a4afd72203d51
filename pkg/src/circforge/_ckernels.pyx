# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled codeword-enumeration kernels.

Depth-first walk over all scalar-combinations of the generator rows
with incremental partial sums: O(n) table lookups per codeword.
"""

import numpy as np


cdef void _mw_rec(Py_ssize_t lvl, Py_ssize_t k, Py_ssize_t n, Py_ssize_t S,
                  int[:, ::1] rows, int[:, ::1] add, int[:, ::1] mul,
                  int[::1] scalars, int[:, ::1] partial, long* best) noexcept:
    cdef Py_ssize_t s, j
    cdef int sc
    cdef long w
    if lvl == k:
        w = 0
        for j in range(n):
            if partial[lvl, j] != 0:
                w += 1
        if 0 < w < best[0]:
            best[0] = w
        return
    for s in range(S):
        sc = scalars[s]
        for j in range(n):
            partial[lvl + 1, j] = add[partial[lvl, j], mul[sc, rows[lvl, j]]]
        _mw_rec(lvl + 1, k, n, S, rows, add, mul, scalars, partial, best)


cdef void _wc_rec(Py_ssize_t lvl, Py_ssize_t k, Py_ssize_t n, Py_ssize_t S,
                  int[:, ::1] rows, int[:, ::1] add, int[:, ::1] mul,
                  int[::1] scalars, int[:, ::1] partial, long[::1] counts) noexcept:
    cdef Py_ssize_t s, j
    cdef int sc
    cdef long w
    if lvl == k:
        w = 0
        for j in range(n):
            if partial[lvl, j] != 0:
                w += 1
        counts[w] += 1
        return
    for s in range(S):
        sc = scalars[s]
        for j in range(n):
            partial[lvl + 1, j] = add[partial[lvl, j], mul[sc, rows[lvl, j]]]
        _wc_rec(lvl + 1, k, n, S, rows, add, mul, scalars, partial, counts)


def min_weight(rows, add, mul, scalars, suffix_cap=None):
    """Minimum Hamming weight over all nonzero scalar-combinations of rows."""
    rows = np.ascontiguousarray(rows, dtype=np.int32)
    add = np.ascontiguousarray(add, dtype=np.int32)
    mul = np.ascontiguousarray(mul, dtype=np.int32)
    scalars = np.ascontiguousarray(scalars, dtype=np.int32)
    cdef Py_ssize_t k = rows.shape[0], n = rows.shape[1]
    if k == 0:
        raise ValueError("no generators to enumerate")
    partial = np.zeros((k + 1, n), dtype=np.int32)
    cdef long best = n + 1
    _mw_rec(0, k, n, scalars.shape[0], rows, add, mul, scalars, partial, &best)
    return int(best)


def weight_counts(rows, add, mul, scalars, suffix_cap=None):
    """Counts of codeword weights over all scalar-combinations (zero included)."""
    rows = np.ascontiguousarray(rows, dtype=np.int32)
    add = np.ascontiguousarray(add, dtype=np.int32)
    mul = np.ascontiguousarray(mul, dtype=np.int32)
    scalars = np.ascontiguousarray(scalars, dtype=np.int32)
    cdef Py_ssize_t k = rows.shape[0], n = rows.shape[1]
    counts = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        counts[0] = 1
        return counts
    partial = np.zeros((k + 1, n), dtype=np.int32)
    _wc_rec(0, k, n, scalars.shape[0], rows, add, mul, scalars, partial, counts)
    return counts
