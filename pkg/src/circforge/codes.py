"""Linear codes by generator matrix, additive codes over extension
alphabets, structural predicates, and exact minimum distance.

Block convention for index-l quasi-cyclic codes of length n = l*m: a
codeword interleaves its l polynomial blocks coefficient by
coefficient, entry c_{i,j} (coefficient j of block i) sitting at
position j*l + i.  With that layout the global shift T acts on the
block tuple as (c_0, ..., c_{l-1}) -> (x*c_{l-1}, c_0, ..., c_{l-2}),
so T^l multiplies every block by x and module-generated constructions
are literally invariant under T^l.
"""

from __future__ import annotations

import os

import numpy as np

from . import kernels
from .galois import ExtensionTower, Field

DEFAULT_BUDGET = 1 << 24


class BudgetError(ValueError):
    """Enumeration space exceeds the configured budget."""


def enumeration_budget() -> int:
    env = os.environ.get("CIRCFORGE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def shift(v, steps: int = 1) -> np.ndarray:
    """T**steps with T(c) = (c_{n-1}, c_0, ..., c_{n-2})."""
    return np.roll(np.asarray(v, dtype=np.int32), steps)


def weight(v) -> int:
    """Hamming weight: number of nonzero entries."""
    return int(np.count_nonzero(np.asarray(v)))


def interleave_blocks(blocks) -> np.ndarray:
    """Blocks (l, m) -> vector with v[j*l + i] = blocks[i, j]."""
    return np.ascontiguousarray(np.asarray(blocks, dtype=np.int32).T).reshape(-1)


def split_blocks(v, ell: int) -> np.ndarray:
    """Inverse of interleave_blocks: vector -> (l, m) block array."""
    v = np.asarray(v, dtype=np.int32)
    if len(v) % ell:
        raise ValueError(f"length {len(v)} not divisible by {ell}")
    return np.ascontiguousarray(v.reshape(-1, ell).T)


# ---------------------------------------------------------------------------
# row reduction over a field
# ---------------------------------------------------------------------------

def rref(field: Field, rows: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns; canonical per row space."""
    R = np.array(rows, dtype=np.int32, ndmin=2).copy()
    add, mul = field.add_table, field.mul_table
    neg, inv = field.neg_table, field.inv_table
    nrows, ncols = R.shape
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        hot = np.nonzero(R[r:, c])[0]
        if hot.size == 0:
            continue
        pr = r + int(hot[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = mul[inv[R[r, c]], R[r]]
        factors = R[:, c].copy()
        factors[r] = 0
        mask = factors != 0
        if mask.any():
            R[mask] = add[R[mask], mul[neg[factors[mask]][:, None], R[r][None, :]]]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return R[:r], pivots


def reduce_vector(field: Field, R: np.ndarray, pivots: list[int], v) -> np.ndarray:
    """Remainder of v against rref rows; zero iff v lies in the row space."""
    add, mul, neg = field.add_table, field.mul_table, field.neg_table
    w = np.array(v, dtype=np.int32).copy()
    for i, c in enumerate(pivots):
        f = w[c]
        if f:
            w = add[w, mul[neg[f], R[i]]]
    return w


# ---------------------------------------------------------------------------
# linear codes
# ---------------------------------------------------------------------------

class LinearCode:
    """Row-space code over a field; generators as encoding rows (r, n)."""

    def __init__(self, field: Field, rows):
        rows = np.array(rows, dtype=np.int32, ndmin=2)
        if rows.ndim != 2 or rows.shape[1] < 1:
            raise ValueError("generators must form a non-empty 2-D array")
        if rows.min(initial=0) < 0 or rows.max(initial=0) >= field.q:
            raise ValueError("generator entries must be canonical encodings")
        self.field = field
        self.gens = rows
        self.n = rows.shape[1]
        self._rref: np.ndarray | None = None
        self._pivots: list[int] | None = None

    def _reduced(self) -> tuple[np.ndarray, list[int]]:
        if self._rref is None:
            self._rref, self._pivots = rref(self.field, self.gens)
        return self._rref, self._pivots

    @property
    def rref(self) -> np.ndarray:
        return self._reduced()[0]

    @property
    def pivots(self) -> list[int]:
        return self._reduced()[1]

    @property
    def k(self) -> int:
        return self.rref.shape[0]

    def params(self, budget: int | None = None) -> tuple[int, int, int]:
        return self.n, self.k, self.min_distance(budget)

    def contains(self, v) -> bool:
        R, piv = self._reduced()
        return not reduce_vector(self.field, R, piv, v).any()

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinearCode)
                and self.field == other.field and self.n == other.n
                and self.k == other.k
                and bool(np.array_equal(self.rref, other.rref)))

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.rref.tobytes()))

    def __repr__(self) -> str:
        return f"LinearCode[{self.n},{self.k}] over {self.field!r}"

    def dual(self) -> "LinearCode":
        """Null space with respect to the standard inner product."""
        R, piv = self._reduced()
        free = [c for c in range(self.n) if c not in piv]
        if not free:
            return _zero_code(self.field, self.n)
        neg = self.field.neg_table
        rows = np.zeros((len(free), self.n), dtype=np.int32)
        for idx, f in enumerate(free):
            rows[idx, f] = 1
            for i, c in enumerate(piv):
                rows[idx, c] = neg[R[i, f]]
        return LinearCode(self.field, rows)

    def gram(self) -> np.ndarray:
        """G * G^t over the field, computed on the rref generators."""
        F = self.field
        add, mul = F.add_table, F.mul_table
        R = self.rref
        out = np.zeros((R.shape[0], R.shape[0]), dtype=np.int32)
        for i in range(R.shape[0]):
            prod = mul[R[i][None, :], R]
            acc = np.zeros(R.shape[0], dtype=np.int32)
            for c in range(self.n):
                acc = add[acc, prod[:, c]]
            out[i] = acc
        return out

    def min_distance(self, budget: int | None = None) -> int:
        """Exact minimum distance by exhaustive message enumeration."""
        if self.k < 1:
            raise ValueError("distance of a zero-dimensional code is undefined")
        budget = enumeration_budget() if budget is None else budget
        if self.field.q ** self.k > budget:
            raise BudgetError(
                f"q^k = {self.field.q}^{self.k} exceeds the budget {budget}")
        F = self.field
        return kernels.min_weight(self.rref, F.add_table, F.mul_table,
                                  np.arange(F.q, dtype=np.int32))

    def weight_distribution(self, budget: int | None = None) -> np.ndarray:
        """Counts of codeword weights 0..n over the whole code."""
        budget = enumeration_budget() if budget is None else budget
        if self.k >= 1 and self.field.q ** self.k > budget:
            raise BudgetError(
                f"q^k = {self.field.q}^{self.k} exceeds the budget {budget}")
        F = self.field
        return kernels.weight_counts(self.rref, F.add_table, F.mul_table,
                                     np.arange(F.q, dtype=np.int32))

    def codewords(self):
        """Iterate all codewords (budget-unchecked; call on small codes)."""
        F, R = self.field, self.rref
        add, mul = F.add_table, F.mul_table
        words = np.zeros((1, self.n), dtype=np.int32)
        for row in R:
            mults = mul[np.ix_(np.arange(F.q), row)]
            words = add[words[:, None, :], mults[None, :, :]].reshape(-1, self.n)
        yield from words


def _zero_code(field: Field, n: int) -> LinearCode:
    c = LinearCode(field, np.zeros((1, n), dtype=np.int32))
    return c


def is_quasi_cyclic(code: LinearCode, ell: int) -> bool:
    """True iff T**ell maps every generator back into the row space."""
    if ell < 1 or code.n % ell:
        raise ValueError(f"index {ell} does not divide the length {code.n}")
    return all(code.contains(shift(g, ell)) for g in code.gens)


def is_cyclic(code: LinearCode) -> bool:
    return is_quasi_cyclic(code, 1)


def index(code: LinearCode) -> int:
    """Smallest divisor l of n with T**l-invariance.

    Divisors suffice: invariance under T**a and T**b gives invariance
    under T**gcd(a,b), and T**n is always the identity.
    """
    for ell in range(1, code.n + 1):
        if code.n % ell == 0 and is_quasi_cyclic(code, ell):
            return ell
    raise AssertionError("unreachable: T^n is the identity")  # pragma: no cover


def is_self_dual(code: LinearCode) -> bool:
    """k = n/2 and G * G^t = 0."""
    if 2 * code.k != code.n:
        return False
    return not code.gram().any()


# ---------------------------------------------------------------------------
# additive codes over an extension alphabet
# ---------------------------------------------------------------------------

class AdditiveCode:
    """Base-field-linear code of length m over the tower's top field.

    Stored through base-field generators; every predicate reduces to a
    rank computation over the base field after expanding each alphabet
    symbol into its ``degree`` base coordinates.
    """

    def __init__(self, tower: ExtensionTower, gens):
        gens = np.array(gens, dtype=np.int32, ndmin=2)
        if gens.ndim != 2 or gens.shape[1] < 1:
            raise ValueError("generators must form a non-empty 2-D array")
        if gens.min(initial=0) < 0 or gens.max(initial=0) >= tower.field.q:
            raise ValueError("entries must be canonical alphabet encodings")
        self.tower = tower
        self.gens = gens
        self.m = gens.shape[1]
        self._expanded: np.ndarray | None = None
        self._rref: np.ndarray | None = None
        self._pivots: list[int] | None = None

    @property
    def base(self) -> Field:
        return self.tower.base

    @property
    def alphabet(self) -> Field:
        return self.tower.field

    def expanded(self) -> np.ndarray:
        if self._expanded is None:
            ex = self.tower.expand_array(self.gens)  # (r, m, degree)
            self._expanded = ex.reshape(self.gens.shape[0], -1)
        return self._expanded

    def _reduced(self) -> tuple[np.ndarray, list[int]]:
        if self._rref is None:
            self._rref, self._pivots = rref(self.base, self.expanded())
        return self._rref, self._pivots

    @property
    def k_q(self) -> int:
        """Dimension over the base field."""
        return self._reduced()[0].shape[0]

    @property
    def size(self) -> int:
        return self.base.q ** self.k_q

    def independent_gens(self) -> np.ndarray:
        """A base-independent generator set, as alphabet rows (k_q, m)."""
        R, _ = self._reduced()
        return self.tower.combine_array(R.reshape(R.shape[0], self.m, self.tower.degree))

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.int32)
        ex = self.tower.expand_array(v).reshape(-1)
        R, piv = self._reduced()
        return not reduce_vector(self.base, R, piv, ex).any()

    def min_distance(self, budget: int | None = None) -> int:
        """Exact minimum symbol weight over all base-field combinations."""
        if self.k_q < 1:
            raise ValueError("distance of a zero-dimensional code is undefined")
        budget = enumeration_budget() if budget is None else budget
        if self.base.q ** self.k_q > budget:
            raise BudgetError(
                f"q^k_q = {self.base.q}^{self.k_q} exceeds the budget {budget}")
        A = self.alphabet
        return kernels.min_weight(self.independent_gens(), A.add_table, A.mul_table,
                                  np.arange(self.base.q, dtype=np.int32))

    def __repr__(self) -> str:
        return (f"AdditiveCode[m={self.m}, k_q={self.k_q}] over "
                f"GF({self.alphabet.q})/GF({self.base.q})")


def is_additive_cyclic(code: AdditiveCode) -> bool:
    """True iff the shift T maps every generator into the base-field span."""
    return all(code.contains(shift(g, 1)) for g in code.gens)


def is_extension_linear(code: AdditiveCode) -> bool:
    """True iff the code is linear over the full alphabet field.

    Checked as closure of the span under multiplication by the tower
    generator z; the size obstruction (degree must divide k_q) is a
    cheap necessary condition tested first.
    """
    if code.k_q % code.tower.degree:
        return False
    A = code.alphabet
    z_row = A.mul_table[code.tower.z]
    return all(code.contains(z_row[g]) for g in code.gens)
