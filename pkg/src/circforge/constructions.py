"""Double-circulant, four-circulant, and random one-generator QC codes,
plus exhaustive searches for self-dual instances.

All generator matrices follow the interleaved block layout of
``codes``: a module row (c_0(x), ..., c_{l-1}(x)) becomes the vector
with c_{i,j} at position j*l + i, and the code collects the rows
x^j * (c_0, ..., c_{l-1}) for j = 0..m-1 per module generator.
"""

from __future__ import annotations

import itertools
import random

import numpy as np

from .codes import LinearCode, interleave_blocks, shift
from .galois import Field, field_create, prime_power
from .rings import RingElement, reciprocal, ring_mul


class CirculantMatrix:
    """Circulant of order m: row i is T**i of the first row."""

    __slots__ = ("field", "first_row")

    def __init__(self, field: Field, first_row):
        self.field = field
        self.first_row = np.array(first_row, dtype=np.int32)

    @property
    def m(self) -> int:
        return len(self.first_row)

    def matrix(self) -> np.ndarray:
        return np.stack([shift(self.first_row, i) for i in range(self.m)])

    def poly(self) -> RingElement:
        return RingElement(self.field, self.first_row.tolist())

    def __mul__(self, other: "CirculantMatrix") -> "CirculantMatrix":
        return circulant(ring_mul(self.poly(), other.poly()))

    def __eq__(self, other) -> bool:
        return (isinstance(other, CirculantMatrix)
                and self.field == other.field
                and np.array_equal(self.first_row, other.first_row))

    def __repr__(self) -> str:
        return f"CirculantMatrix({self.first_row.tolist()}, {self.field!r})"


def circulant(a: RingElement) -> CirculantMatrix:
    """Circulant whose first row is a's coefficient vector; products of
    circulants track products in F_q[x]/(x^m - 1)."""
    return CirculantMatrix(a.field, a.coeffs)


def module_code(field: Field, m: int, generators) -> LinearCode:
    """Code generated as an F_q[x]/(x^m - 1)-module by block-row tuples."""
    rows = []
    for blocks in generators:
        vecs = [np.array(b.coeffs, dtype=np.int32) for b in blocks]
        for j in range(m):
            rows.append(interleave_blocks([shift(v, j) for v in vecs]))
    return LinearCode(field, np.stack(rows))


def double_circulant(a: RingElement) -> LinearCode:
    """[2m, m] code with block generator (I | circulant(a)); 2-quasi-cyclic."""
    from .rings import ring_one
    one = ring_one(a.field, a.m)
    return module_code(a.field, a.m, [(one, a)])


def is_self_dual_dc(a: RingElement) -> bool:
    """Self-duality shortcut for double circulants: a(x) a(x^-1) = -1."""
    F, m = a.field, a.m
    minus_one = RingElement(F, [F.neg(1)] + [0] * (m - 1))
    return ring_mul(a, reciprocal(a)) == minus_one


def four_circulant(a: RingElement, b: RingElement) -> LinearCode:
    """[4n, 2n] code with generator (I 0 A B ; 0 I -B^t A^t), A, B circulant."""
    if a.field != b.field or a.m != b.m:
        raise ValueError("a and b must live in the same ring")
    from .rings import ring_one, ring_zero
    F, m = a.field, a.m
    one, zero = ring_one(F, m), ring_zero(F, m)
    return module_code(F, m, [(one, zero, a, b),
                              (zero, one, -reciprocal(b), reciprocal(a))])


def is_self_dual_fc(a: RingElement, b: RingElement) -> bool:
    """Block identity for four-circulant self-duality: 1 + a a* + b b* = 0."""
    F, m = a.field, a.m
    one = RingElement(F, [1] + [0] * (m - 1))
    acc = one + ring_mul(a, reciprocal(a)) + ring_mul(b, reciprocal(b))
    return not acc


def _candidates(field: Field, m: int):
    """All ring elements in lexicographic coefficient order (c_0 first)."""
    for tail in itertools.product(range(field.q), repeat=m):
        yield RingElement(field, list(tail))


def _field_of(q: int) -> Field:
    p, e = prime_power(q)
    return field_create(p, e)


def search_dcsd(q: int, m: int, budget: int | None = None) -> list[RingElement]:
    """Self-dual double-circulant generators a(x), lexicographic order.

    Enumerates up to ``budget`` candidates (all q^m when the budget is
    None or large enough); the empty list is a valid result.
    """
    F = _field_of(q)
    out = []
    for i, a in enumerate(_candidates(F, m)):
        if budget is not None and i >= budget:
            break
        if is_self_dual_dc(a):
            out.append(a)
    return out


def search_fcsd(q: int, m: int, budget: int | None = None) -> list[tuple[RingElement, RingElement]]:
    """Self-dual four-circulant pairs (a, b), lexicographic in (a, b)."""
    F = _field_of(q)
    out = []
    count = 0
    for a in _candidates(F, m):
        ar = ring_mul(a, reciprocal(a))
        for b in _candidates(F, m):
            if budget is not None and count >= budget:
                return out
            count += 1
            one = RingElement(F, [1] + [0] * (m - 1))
            if not (one + ar + ring_mul(b, reciprocal(b))):
                out.append((a, b))
    return out


def one_generator_qc(field: Field, m: int, polys) -> LinearCode:
    """Module code with block row (1, a_1, ..., a_{l-1}); index divides l."""
    from .rings import ring_one
    blocks = [ring_one(field, m)]
    for p in polys:
        if not isinstance(p, RingElement):
            p = RingElement(field, p)
        if p.field != field or p.m != m:
            raise ValueError("mismatched ring for generator block")
        blocks.append(p)
    return module_code(field, m, [tuple(blocks)])


def random_qc(q: int, m: int, ell: int, seed: int = 0) -> LinearCode:
    """Seeded one-generator quasi-cyclic sample of length ell*m, rate 1/ell.

    The leading unit block forces dimension exactly m; the remaining
    ell-1 blocks are drawn uniformly from F_q[x]/(x^m - 1).
    """
    if ell < 2:
        raise ValueError("index must be >= 2")
    F = _field_of(q)
    rng = random.Random(seed)
    polys = [[rng.randrange(q) for _ in range(m)] for _ in range(ell - 1)]
    return one_generator_qc(F, m, polys)
