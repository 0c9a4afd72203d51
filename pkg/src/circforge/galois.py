"""Exact arithmetic in GF(p^e) and explicit degree-l extension towers.

Every element is handled through its canonical integer encoding: the
digits of the encoding in base |base field| are the coordinates with
respect to the power basis of the defining modulus.  Prime-field
encodings are ordinary residues, so 0 and 1 are the additive and
multiplicative identities of every field, and a base-field element
embeds into any tower over it with an unchanged encoding.

Moduli are chosen deterministically: the monic irreducible whose
non-leading coefficient vector (c_0, ..., c_{d-1}) is lexicographically
smallest, low-degree coefficients compared first.  This makes fields,
encodings, and every file emitted from them reproducible.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

# Largest field order for which dense operation tables are built.
TABLE_MAX = 4096


# ---------------------------------------------------------------------------
# elementary number theory
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk-scale inputs)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in itertools.chain([2], itertools.count(3, 2)):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Write q = p**e with p prime, or raise ValueError."""
    if q >= 2:
        fac = factorize(q)
        if len(fac) == 1:
            [(p, e)] = fac.items()
            return p, e
    raise ValueError(f"{q} is not a prime power")


def mult_order(a: int, n: int) -> int:
    """Smallest t >= 1 with a**t = 1 (mod n)."""
    if n < 2:
        raise ValueError("modulus must be >= 2")
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) != 1, multiplicative order undefined")
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    order = phi
    for p in factorize(phi):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class Field:
    """A finite field: GF(p) or an extension of another ``Field``.

    ``modulus`` holds the non-leading coefficients (little-endian,
    encoded over the base field) of the monic defining polynomial; it is
    empty for prime fields.  Instances are immutable value objects and
    safe to share between threads; operation tables are cached.
    """

    __slots__ = ("p", "base", "modulus", "degree", "e", "q",
                 "_add", "_mul", "_neg", "_inv", "_squares", "_digitmat")

    def __init__(self, p: int, base: "Field | None", modulus: tuple[int, ...]):
        self.p = p
        self.base = base
        self.modulus = tuple(int(c) for c in modulus)
        if base is None:
            self.degree = 1
            self.e = 1
            self.q = p
        else:
            self.degree = len(self.modulus)
            self.e = base.e * self.degree
            self.q = base.q ** self.degree
        self._add = None
        self._mul = None
        self._neg = None
        self._inv = None
        self._squares = None
        self._digitmat = None

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Field)
                and self.p == other.p
                and self.modulus == other.modulus
                and self.base == other.base)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus, self.base))

    def __repr__(self) -> str:
        if self.base is None:
            return f"GF({self.p})"
        return f"GF({self.q})"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def elements(self) -> range:
        return range(self.q)

    # -- encodings ----------------------------------------------------------

    def digits(self, enc: int) -> list[int]:
        """Coordinates of ``enc`` over the base field, little-endian."""
        if self.base is None:
            return [enc]
        q0 = self.base.q
        out = []
        for _ in range(self.degree):
            enc, r = divmod(enc, q0)
            out.append(r)
        return out

    def undigits(self, ds) -> int:
        if self.base is None:
            return int(ds[0])
        q0 = self.base.q
        enc = 0
        for d in reversed(list(ds)):
            enc = enc * q0 + int(d)
        return enc

    def check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an encoding in {self!r}")
        return a

    # -- scalar arithmetic on encodings -------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.base is None:
            return (a + b) % self.p
        if self.q <= TABLE_MAX:
            return int(self.add_table[a, b])
        B = self.base
        return self.undigits(B.add(x, y) for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        if self.base is None:
            return (-a) % self.p
        if self.q <= TABLE_MAX:
            return int(self.neg_table[a])
        return self.undigits(self.base.neg(x) for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.base is None:
            return (a * b) % self.p
        if self.q <= TABLE_MAX:
            return int(self.mul_table[a, b])
        return self._mul_poly(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative inverse")
        if self.base is None:
            return pow(a, self.p - 2, self.p)
        if self.q <= TABLE_MAX:
            return int(self.inv_table[a])
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        out, cur = 1, a
        while k:
            if k & 1:
                out = self.mul(out, cur)
            cur = self.mul(cur, cur)
            k >>= 1
        return out

    def _mul_poly(self, a: int, b: int) -> int:
        """Multiply via digit polynomials; used below table range."""
        B, d = self.base, self.degree
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    if bj:
                        prod[i + j] = B.add(prod[i + j], B.mul(ai, bj))
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i, mi in enumerate(self.modulus):
                    if mi:
                        prod[k - d + i] = B.add(prod[k - d + i], B.mul(c, B.neg(mi)))
        return self.undigits(prod[:d])

    # -- dense tables --------------------------------------------------------

    def _digit_matrix(self) -> np.ndarray:
        if self._digitmat is None:
            q0 = self.base.q
            enc = np.arange(self.q, dtype=np.int64)
            cols = []
            for _ in range(self.degree):
                enc, r = np.divmod(enc, q0)
                cols.append(r)
            self._digitmat = np.stack(cols, axis=1).astype(np.int32)
        return self._digitmat

    def _build_tables(self) -> None:
        q = self.q
        if q > TABLE_MAX:
            raise ValueError(f"operation tables not built for q={q} > {TABLE_MAX}")
        if self.base is None:
            ar = np.arange(q, dtype=np.int64)
            self._add = ((ar[:, None] + ar[None, :]) % self.p).astype(np.int32)
            self._mul = ((ar[:, None] * ar[None, :]) % self.p).astype(np.int32)
            self._neg = ((-ar) % self.p).astype(np.int32)
            inv = [0] * q
            for a in range(1, q):
                inv[a] = pow(a, self.p - 2, self.p)
            self._inv = np.array(inv, dtype=np.int32)
            return
        base = self.base
        D = self._digit_matrix()
        q0 = base.q
        badd = base.add_table.astype(np.int64)
        bneg = base.neg_table.astype(np.int64)
        add = np.zeros((q, q), dtype=np.int64)
        neg = np.zeros(q, dtype=np.int64)
        w = 1
        for i in range(self.degree):
            col = D[:, i]
            add += badd[np.ix_(col, col)] * w
            neg += bneg[col] * w
            w *= q0
        self._add = add.astype(np.int32)
        self._neg = neg.astype(np.int32)
        # Multiplication through a discrete-log table on a group generator.
        gen = None
        for cand in range(2, q):
            exps = [1]
            cur = self._mul_poly(1, cand)
            while cur != 1:
                exps.append(cur)
                cur = self._mul_poly(cur, cand)
            if len(exps) == q - 1:
                gen = exps
                break
        if gen is None:  # pragma: no cover - the unit group is always cyclic
            raise RuntimeError("no multiplicative generator found")
        exp = np.array(gen, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        la = log[:, None] + log[None, :]
        mul = exp[la % (q - 1)]
        mul[0, :] = 0
        mul[:, 0] = 0
        self._mul = mul.astype(np.int32)
        inv = exp[(q - 1 - log) % (q - 1)]
        inv[0] = 0
        self._inv = inv.astype(np.int32)

    @property
    def add_table(self) -> np.ndarray:
        if self._add is None:
            self._build_tables()
        return self._add

    @property
    def mul_table(self) -> np.ndarray:
        if self._mul is None:
            self._build_tables()
        return self._mul

    @property
    def neg_table(self) -> np.ndarray:
        if self._neg is None:
            self._build_tables()
        return self._neg

    @property
    def inv_table(self) -> np.ndarray:
        if self._inv is None:
            self._build_tables()
        return self._inv

    # -- misc ----------------------------------------------------------------

    def square_set(self) -> frozenset[int]:
        if self._squares is None:
            self._squares = frozenset(self.mul(x, x) for x in range(self.q))
        return self._squares

    def elem(self, value) -> "FieldElement":
        """Wrap an encoding or a coefficient sequence as a FieldElement."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (list, tuple)):
            return FieldElement(self, self.undigits(value))
        return FieldElement(self, self.check(value))

    def serialize(self) -> dict:
        """Header dict {p, e, modulus}; the modulus is over GF(p)."""
        if self.base is not None and self.base.base is not None:
            raise ValueError("only prime-based fields serialize to {p, e, modulus}")
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}


class FieldElement:
    """A field element bound to its field; supports operator arithmetic."""

    __slots__ = ("field", "enc")

    def __init__(self, field: Field, enc: int):
        self.field = field
        self.enc = field.check(enc)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field.digits(self.enc))

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("mixed-field arithmetic")
            return other.enc
        return self.field.check(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.enc, self._coerce(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.enc, self._coerce(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.enc, self._coerce(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.enc, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.enc))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.enc))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.enc == other.enc
        if isinstance(other, int):
            return self.enc == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.enc))

    def __bool__(self) -> bool:
        return self.enc != 0

    def __repr__(self) -> str:
        return f"{self.field!r}[{self.enc}]"


def is_square(field: Field, a) -> bool:
    """True iff some x in the field satisfies x*x = a."""
    a = a.enc if isinstance(a, FieldElement) else field.check(a)
    if a == 0 or field.p == 2:
        return True
    if field.q <= 2 ** 16:
        return a in field.square_set()
    return field.pow(a, (field.q - 1) // 2) == 1


# ---------------------------------------------------------------------------
# polynomials over a field (little-endian encoding lists)
# ---------------------------------------------------------------------------

def _ptrim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(F: Field, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    if F.base is None:
        out = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)) % F.p
        return _ptrim(out.tolist())
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return _ptrim(out)


def _pmod(F: Field, a: list[int], m: list[int]) -> list[int]:
    dm = len(m) - 1
    if dm < 0:
        raise ZeroDivisionError("polynomial modulus is zero")
    lead_inv = F.inv(m[-1])
    if F.base is None:
        rem = np.array(a, dtype=np.int64)
        marr = np.array(m[:-1], dtype=np.int64)
        for k in range(len(rem) - 1, dm - 1, -1):
            c = rem[k]
            if c:
                c = (c * lead_inv) % F.p
                rem[k - dm:k] = (rem[k - dm:k] - c * marr) % F.p
                rem[k] = 0
        return _ptrim(rem[:dm].tolist())
    rem = list(a)
    for k in range(len(rem) - 1, dm - 1, -1):
        c = rem[k]
        if c:
            c = F.mul(c, lead_inv)
            for i in range(dm):
                rem[k - dm + i] = F.sub(rem[k - dm + i], F.mul(c, m[i]))
            rem[k] = 0
    return _ptrim(rem[:dm])


def _pgcd(F: Field, a: list[int], b: list[int]) -> list[int]:
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(F, a, b)
    if a:
        li = F.inv(a[-1])
        a = [F.mul(c, li) for c in a]
    return a


def _ppowmod(F: Field, base: list[int], k: int, m: list[int]) -> list[int]:
    out = [1]
    cur = _pmod(F, list(base), m)
    while k:
        if k & 1:
            out = _pmod(F, _pmul(F, out, cur), m)
        cur = _pmod(F, _pmul(F, cur, cur), m)
        k >>= 1
    return out


def poly_is_irreducible(F: Field, f: list[int]) -> bool:
    """Irreducibility of f over F by the x**(q**i) gcd ladder."""
    f = _ptrim(list(f))
    d = len(f) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    # frob[i] = x**(q**i) mod f, built by iterated q-th powers
    cur = [0, 1]
    frob = [cur]
    for _ in range(d):
        cur = _ppowmod(F, cur, F.q, f)
        frob.append(cur)
    for r in factorize(d):
        g = list(frob[d // r])
        # gcd(x**(q**(d/r)) - x, f) must be trivial
        while len(g) < 2:
            g.append(0)
        g[1] = F.sub(g[1], 1)
        if len(_pgcd(F, g, f)) > 1:
            return False
    top = list(frob[d])
    while len(top) < 2:
        top.append(0)
    top[1] = F.sub(top[1], 1)
    return not _ptrim(top)


def smallest_irreducible(F: Field, d: int) -> tuple[int, ...]:
    """Non-leading coefficients of the lex-smallest monic irreducible of
    degree d over F (low-degree coefficients compared first)."""
    for tail in itertools.product(range(F.q), repeat=d):
        if poly_is_irreducible(F, list(tail) + [1]):
            return tuple(tail)
    raise RuntimeError(f"no irreducible of degree {d} over {F!r}")  # pragma: no cover


# ---------------------------------------------------------------------------
# construction entry points
# ---------------------------------------------------------------------------

_field_cache: dict[tuple[int, int], Field] = {}
_tower_cache: dict[tuple[Field, int], "ExtensionTower"] = {}


def field_create(p: int, e: int) -> Field:
    """GF(p**e) with the deterministic lex-smallest modulus over GF(p)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    key = (p, e)
    if key not in _field_cache:
        if e == 1:
            _field_cache[key] = Field(p, None, ())
        else:
            base = field_create(p, 1)
            _field_cache[key] = Field(p, base, smallest_irreducible(base, e))
    return _field_cache[key]


def field_from_parts(p: int, e: int, modulus) -> Field:
    """Rebuild a prime-based field from serialized {p, e, modulus} parts."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    modulus = tuple(int(c) for c in modulus)
    if e == 1:
        if modulus:
            raise ValueError("prime fields carry an empty modulus")
        return field_create(p, 1)
    if len(modulus) != e:
        raise ValueError("modulus length must equal the extension degree")
    base = field_create(p, 1)
    if not poly_is_irreducible(base, list(modulus) + [1]):
        raise ValueError("modulus is not irreducible over the prime field")
    canonical = field_create(p, e)
    if canonical.modulus == modulus:
        return canonical
    return Field(p, base, modulus)


class ExtensionTower:
    """GF(q) -> GF(q**degree) with the power basis {1, z, ..., z**(degree-1)}.

    ``expand`` and ``combine`` are the mutually inverse GF(q)-linear maps
    between GF(q**degree) and GF(q)**degree; with the canonical encodings
    they are plain base-q digit decomposition and recomposition.
    """

    __slots__ = ("base", "degree", "modulus", "field")

    def __init__(self, base: Field, degree: int, modulus: tuple[int, ...], field: Field):
        self.base = base
        self.degree = degree
        self.modulus = modulus
        self.field = field

    @property
    def z(self) -> int:
        """Encoding of the residue of the indeterminate (basis element e_1)."""
        return self.base.q

    def expand(self, enc: int) -> tuple[int, ...]:
        return tuple(self.field.digits(self.field.check(enc)))

    def combine(self, coords) -> int:
        coords = list(coords)
        if len(coords) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates")
        for c in coords:
            self.base.check(c)
        return self.field.undigits(coords)

    def embed(self, base_enc: int) -> int:
        """Embedding GF(q) -> GF(q**degree); encodings are unchanged."""
        return self.base.check(base_enc)

    def expand_array(self, arr: np.ndarray) -> np.ndarray:
        """Digitwise expansion along a new trailing axis."""
        arr = np.asarray(arr, dtype=np.int64)
        q0 = self.base.q
        cols = []
        for _ in range(self.degree):
            arr, r = np.divmod(arr, q0)
            cols.append(r)
        return np.stack(cols, axis=-1).astype(np.int32)

    def combine_array(self, arr: np.ndarray) -> np.ndarray:
        """Inverse of expand_array along the trailing axis."""
        arr = np.asarray(arr, dtype=np.int64)
        w = self.base.q ** np.arange(self.degree, dtype=np.int64)
        return (arr @ w).astype(np.int32)

    def __repr__(self) -> str:
        return f"Tower(GF({self.base.q})->GF({self.field.q}))"


def extend(base: Field, degree: int) -> ExtensionTower:
    """Degree-``degree`` extension of ``base`` with the power basis."""
    if degree < 2:
        raise ValueError("tower degree must be >= 2")
    key = (base, degree)
    if key not in _tower_cache:
        g = smallest_irreducible(base, degree)
        _tower_cache[key] = ExtensionTower(base, degree, g, Field(base.p, base, g))
    return _tower_cache[key]
