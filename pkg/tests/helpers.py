"""Brute-force oracles kept independent of the library's fast paths.

Everything here works element by element through the Field scalar API
(or plain integer arithmetic), never through the enumeration kernels or
cached row reductions, so library results can be checked against a
second computation route.
"""

from __future__ import annotations

import itertools

import numpy as np


def naive_codewords(field, rows):
    """All distinct codewords of the row space, by scalar messages."""
    rows = [list(map(int, r)) for r in rows]
    n = len(rows[0])
    seen = set()
    for msg in itertools.product(range(field.q), repeat=len(rows)):
        word = [0] * n
        for coef, row in zip(msg, rows):
            if coef:
                for j in range(n):
                    word[j] = field.add(word[j], field.mul(coef, row[j]))
        seen.add(tuple(word))
    return seen


def naive_min_distance(field, rows):
    words = naive_codewords(field, rows)
    return min(sum(1 for x in w if x) for w in words if any(w))


def naive_weight_counts(field, rows, n):
    counts = [0] * (n + 1)
    for w in naive_codewords(field, rows):
        counts[sum(1 for x in w if x)] += 1
    return counts


def naive_mult_order(a, n):
    """Multiplicative order by plain iteration."""
    a %= n
    t, cur = 1, a
    while cur != 1:
        cur = (cur * a) % n
        t += 1
    return t


def naive_entropy_inv(q, t, steps=80):
    """Independent bisection for the q-ary entropy inverse."""
    import math

    def h(y):
        if y == 0:
            return 0.0
        lq = math.log(q)
        out = y * math.log(q - 1) / lq - y * math.log(y) / lq
        if y < 1:
            out -= (1 - y) * math.log(1 - y) / lq
        return out

    lo, hi = 0.0, (q - 1) / q
    for _ in range(steps):
        mid = (lo + hi) / 2
        if h(mid) < t:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def poly_blocks(code, ell):
    """Generators as polynomial block tuples (inverse interleave)."""
    out = []
    for g in code.gens:
        arr = np.asarray(g).reshape(-1, ell).T
        out.append([row.copy() for row in arr])
    return out


def from_blocks(field, blocks):
    """Interleave polynomial blocks back into a codeword vector."""
    arr = np.stack(blocks)
    return np.ascontiguousarray(arr.T).reshape(-1)
