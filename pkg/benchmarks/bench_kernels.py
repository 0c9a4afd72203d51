"""Benchmark the compiled enumeration kernels against the numpy fallback.

Run from the repository root after installing the package:

    python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

import numpy as np

from circforge import _pykernels
from circforge.codes import LinearCode
from circforge.constructions import random_qc
from circforge.galois import field_create

try:
    from circforge import _ckernels
except ImportError:
    _ckernels = None


def _cases():
    rng = np.random.default_rng(1)
    f2 = field_create(2, 1)
    yield "GF(2) random [48,18]", f2, LinearCode(f2, rng.integers(0, 2, size=(18, 48)))
    f3 = field_create(3, 1)
    yield "GF(3) random [30,12]", f3, LinearCode(f3, rng.integers(0, 3, size=(12, 30)))
    f5 = field_create(5, 1)
    yield "GF(5) one-generator QC [28,7]", f5, random_qc(5, 7, 4, seed=3)
    f9 = field_create(3, 2)
    yield "GF(9) random [16,6]", f9, LinearCode(f9, rng.integers(0, 9, size=(6, 16)))


def _time(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return result, best


def main() -> None:
    print(f"{'case':34s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}  d")
    for name, fld, code in _cases():
        rows = code.rref
        scalars = np.arange(fld.q, dtype=np.int32)
        args = (rows, fld.add_table, fld.mul_table, scalars)
        d_py, t_py = _time(_pykernels.min_weight, *args)
        if _ckernels is None:
            print(f"{name:34s} {t_py:10.4f} {'-':>10s} {'-':>8s}  {d_py}")
            continue
        d_c, t_c = _time(_ckernels.min_weight, *args)
        assert d_py == d_c, f"backend mismatch on {name}: {d_py} != {d_c}"
        wd_py = _pykernels.weight_counts(*args)
        wd_c = _ckernels.weight_counts(*args)
        assert np.array_equal(wd_py, wd_c)
        print(f"{name:34s} {t_py:10.4f} {t_c:10.4f} {t_py / t_c:7.1f}x  {d_py}")
    if _ckernels is None:
        print("compiled kernels not built; showing fallback timings only")


if __name__ == "__main__":
    main()
