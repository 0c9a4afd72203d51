"""q-ary entropy, its inverse by bisection, and the rate/distance
targets used to score constructions."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class BoundQuery:
    """Parameters for a bound evaluation."""

    q: int
    ell: int
    tolerance: float = 1e-12

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("alphabet size must be >= 2")
        if self.ell < 2:
            raise ValueError("index must be >= 2")
        if not 0 < self.tolerance < 1:
            raise ValueError("tolerance must lie in (0, 1)")


def entropy(q: int, y: float) -> float:
    """H_q(y) = y log_q(q-1) - y log_q(y) - (1-y) log_q(1-y).

    Defined on [0, (q-1)/q] with the conventions H_q(0) = 0 and
    H_q((q-1)/q) = 1 (0 log 0 reads as 0).
    """
    if q < 2:
        raise ValueError("alphabet size must be >= 2")
    top = (q - 1) / q
    if y < 0 or y > top + 1e-15:
        raise ValueError(f"argument {y} outside [0, {top}]")
    if y == 0:
        return 0.0
    y = min(y, top)
    lq = math.log(q)
    out = y * math.log(q - 1) / lq - y * math.log(y) / lq
    if y < 1.0:
        out -= (1.0 - y) * math.log(1.0 - y) / lq
    return out


def entropy_inv(q: int, t: float, tolerance: float = 1e-12) -> float:
    """The unique y in [0, (q-1)/q] with H_q(y) = t, by bisection.

    H_q is strictly increasing on the interval, so plain bisection to
    the requested interval width is robust.
    """
    if q < 2:
        raise ValueError("alphabet size must be >= 2")
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"argument {t} outside [0, 1]")
    if t == 0.0:
        return 0.0
    top = (q - 1) / q
    if t == 1.0:
        return top
    lo, hi = 0.0, top
    while hi - lo > tolerance:
        mid = 0.5 * (lo + hi)
        if entropy(q, mid) < t:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def gv_targets(q: int, ell: int, tolerance: float = 1e-12) -> tuple[float, float]:
    """Rate-1/ell targets: delta_qc = H_q^-1(1 - 1/ell) and delta_add =
    delta_qc / ell."""
    query = BoundQuery(q, ell, tolerance)
    d_qc = entropy_inv(query.q, 1.0 - 1.0 / query.ell, query.tolerance)
    return d_qc, d_qc / query.ell
