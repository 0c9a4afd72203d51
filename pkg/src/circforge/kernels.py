"""Hot-kernel dispatch: the compiled extension when built, numpy fallback
otherwise.  CIRCFORGE_KERNEL=py|c forces a backend."""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built; fall back silently
    _ckernels = None

_forced = os.environ.get("CIRCFORGE_KERNEL")
if _forced == "py" or _ckernels is None:
    if _forced == "c" and _ckernels is None:
        raise ImportError("CIRCFORGE_KERNEL=c but the compiled kernels are not built")
    _impl = _pykernels
    BACKEND = "python"
else:
    _impl = _ckernels
    BACKEND = "c"


def min_weight(rows, add, mul, scalars) -> int:
    """Minimum weight over all nonzero scalar-combinations of the rows."""
    return _impl.min_weight(np.ascontiguousarray(rows, dtype=np.int32),
                            np.ascontiguousarray(add, dtype=np.int32),
                            np.ascontiguousarray(mul, dtype=np.int32),
                            np.ascontiguousarray(scalars, dtype=np.int32))


def weight_counts(rows, add, mul, scalars) -> np.ndarray:
    """Weight distribution over all scalar-combinations, zero word included."""
    return _impl.weight_counts(np.ascontiguousarray(rows, dtype=np.int32),
                               np.ascontiguousarray(add, dtype=np.int32),
                               np.ascontiguousarray(mul, dtype=np.int32),
                               np.ascontiguousarray(scalars, dtype=np.int32))
