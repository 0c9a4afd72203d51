"""The residue ring F_q[x]/(x^m - 1) and the primitive-root machinery
that controls when (x^m - 1)/(x - 1) stays irreducible."""

from __future__ import annotations

import math

import numpy as np

from .galois import (Field, field_create, is_prime, mult_order,
                     poly_is_irreducible, prime_power)


class RingElement:
    """Element of F_q[x]/(x^m - 1); coefficient of x^j at position j.

    Coefficients are canonical integer encodings of the field.  The
    arithmetic is well-defined for every m >= 1; when gcd(m, q) != 1
    the ring has repeated roots and the semisimple structure theory no
    longer applies, but the constructions built on top remain exact.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        m = len(coeffs)
        if m < 1:
            raise ValueError("co-index m must be >= 1")
        self.field = field
        self.coeffs = tuple(field.check(c) for c in coeffs)

    @property
    def m(self) -> int:
        return len(self.coeffs)

    def vector(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int32)

    def _compat(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement):
            raise TypeError("expected a RingElement")
        if other.field != self.field or other.m != self.m:
            raise ValueError("mismatched ring")

    def __add__(self, other):
        self._compat(other)
        F = self.field
        return RingElement(F, [F.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._compat(other)
        F = self.field
        return RingElement(F, [F.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        F = self.field
        return RingElement(F, [F.neg(a) for a in self.coeffs])

    def __mul__(self, other):
        return ring_mul(self, other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RingElement)
                and self.field == other.field and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        return f"RingElement({list(self.coeffs)}, {self.field!r})"


def ring_element(field: Field, coeffs) -> RingElement:
    return RingElement(field, coeffs)


def ring_zero(field: Field, m: int) -> RingElement:
    return RingElement(field, [0] * m)


def ring_one(field: Field, m: int) -> RingElement:
    return RingElement(field, [1] + [0] * (m - 1))


def monomial(field: Field, m: int, j: int, c: int = 1) -> RingElement:
    """c * x**j in F_q[x]/(x^m - 1)."""
    coeffs = [0] * m
    coeffs[j % m] = field.check(c)
    return RingElement(field, coeffs)


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    """Cyclic convolution: result_k = sum over i+j = k (mod m) of a_i b_j."""
    a._compat(b)
    F, m = a.field, a.m
    if F.base is None:
        conv = np.convolve(np.array(a.coeffs, dtype=np.int64),
                           np.array(b.coeffs, dtype=np.int64))
        out = np.zeros(m, dtype=np.int64)
        out[:len(conv[:m])] = conv[:m]
        out[:len(conv) - m] += conv[m:]
        return RingElement(F, (out % F.p).tolist())
    out = [0] * m
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j, bj in enumerate(b.coeffs):
                if bj:
                    k = (i + j) % m
                    out[k] = F.add(out[k], F.mul(ai, bj))
    return RingElement(F, out)


def reciprocal(a: RingElement) -> RingElement:
    """a(x^-1): coefficient at x^j becomes the one at x^((m-j) mod m)."""
    m = a.m
    return RingElement(a.field, [a.coeffs[(m - j) % m] for j in range(m)])


# ---------------------------------------------------------------------------
# Artin pairs: m prime with q primitive mod m
# ---------------------------------------------------------------------------

def is_artin_pair(q: int, m: int) -> bool:
    """m prime and q primitive mod m, i.e. ord_m(q) = m - 1.

    Equivalent, by cyclotomic cosets, to (x^m - 1)/(x - 1) being
    irreducible over F_q; ``factor_check`` tests that form directly.
    """
    prime_power(q)
    if m < 2:
        raise ValueError("m must be >= 2")
    if math.gcd(m, q) != 1:
        raise ValueError(f"gcd(m={m}, q={q}) != 1")
    if not is_prime(m):
        return False
    return mult_order(q % m, m) == m - 1


def artin_primes(q: int, limit: int) -> list[int]:
    """All primes m <= limit coprime to q with q primitive mod m, ascending."""
    prime_power(q)
    if limit < 2:
        raise ValueError("limit must be >= 2")
    found = []
    for m in range(2, limit + 1):
        if not is_prime(m) or math.gcd(m, q) != 1:
            continue
        if is_artin_pair(q, m):
            if m - 1 > 1:
                _assert_no_unit_roots(q, m)
            found.append(m)
    return found


def _assert_no_unit_roots(q: int, m: int) -> None:
    # Cheap cross-check: 1 + t + ... + t^(m-1) has no root in F_q when it
    # is irreducible of degree > 1.
    p, e = prime_power(q)
    F = field_create(p, e)
    for t in F.elements():
        acc, power = 0, 1
        for _ in range(m):
            acc = F.add(acc, power)
            power = F.mul(power, t)
        if acc == 0:
            raise RuntimeError(
                f"internal inconsistency: ({t}) is a root of the cyclotomic "
                f"cofactor for q={q}, m={m}")


def factor_check(q: int, m: int) -> bool:
    """Directly test irreducibility of u(x) = (x^m - 1)/(x - 1) over F_q."""
    p, e = prime_power(q)
    if math.gcd(m, q) != 1:
        raise ValueError(f"gcd(m={m}, q={q}) != 1")
    if m == 1:
        return False  # u = 1, degenerate by convention
    F = field_create(p, e)
    return poly_is_irreducible(F, [1] * m)
