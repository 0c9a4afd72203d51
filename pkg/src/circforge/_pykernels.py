"""Pure-numpy codeword enumeration kernels (fallback backend).

The message space is split into disjoint prefix blocks: combinations of
the leading generator rows are walked one by one while all combinations
of the trailing rows are kept as a precomputed table.  Results are
independent of the split, which the test suite exercises explicitly.
"""

from __future__ import annotations

import numpy as np

DEFAULT_SUFFIX_CAP = 4096


def _grow(words: np.ndarray, row: np.ndarray, add: np.ndarray,
          mul: np.ndarray, scalars: np.ndarray) -> np.ndarray:
    mults = mul[np.ix_(scalars, row)]  # (S, n)
    out = add[words[:, None, :], mults[None, :, :]]
    return out.reshape(-1, words.shape[1])


def _combo_table(rows: np.ndarray, add, mul, scalars) -> np.ndarray:
    """All scalar-combinations of ``rows``; digit of the last row varies fastest."""
    words = np.zeros((1, rows.shape[1]), dtype=np.int32)
    for row in rows:
        words = _grow(words, row, add, mul, scalars)
    return words


def _split(k: int, nscalars: int, suffix_cap: int) -> int:
    cap = max(suffix_cap, nscalars)
    t = 1
    while t < k and nscalars ** (t + 1) <= cap:
        t += 1
    return min(t, k)


def min_weight(rows, add, mul, scalars, suffix_cap: int = DEFAULT_SUFFIX_CAP) -> int:
    """Minimum Hamming weight over all nonzero scalar-combinations of rows."""
    rows = np.ascontiguousarray(rows, dtype=np.int32)
    scalars = np.ascontiguousarray(scalars, dtype=np.int32)
    k, n = rows.shape
    if k == 0:
        raise ValueError("no generators to enumerate")
    t = _split(k, len(scalars), suffix_cap)
    suffix = _combo_table(rows[k - t:], add, mul, scalars)
    best = n + 1
    for prefix in _combo_table(rows[:k - t], add, mul, scalars):
        w = np.count_nonzero(add[prefix[None, :], suffix], axis=1)
        nz = w[w > 0]
        if nz.size:
            best = min(best, int(nz.min()))
    return best


def weight_counts(rows, add, mul, scalars, suffix_cap: int = DEFAULT_SUFFIX_CAP) -> np.ndarray:
    """Counts of codeword weights over all scalar-combinations (zero included)."""
    rows = np.ascontiguousarray(rows, dtype=np.int32)
    scalars = np.ascontiguousarray(scalars, dtype=np.int32)
    k, n = rows.shape
    if k == 0:
        out = np.zeros(n + 1, dtype=np.int64)
        out[0] = 1
        return out
    t = _split(k, len(scalars), suffix_cap)
    suffix = _combo_table(rows[k - t:], add, mul, scalars)
    counts = np.zeros(n + 1, dtype=np.int64)
    for prefix in _combo_table(rows[:k - t], add, mul, scalars):
        w = np.count_nonzero(add[prefix[None, :], suffix], axis=1)
        counts += np.bincount(w, minlength=n + 1)
    return counts
