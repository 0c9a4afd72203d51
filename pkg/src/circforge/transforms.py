"""Maps between quasi-cyclic, additive cyclic, grid (two-variable), and
cyclic codes, plus the three end-to-end construction pipelines.

Every pipeline re-verifies the structural claims it relies on (ideal
closure of the grid image, cyclicity of the flattened code, exact
distance bookkeeping).  A failed structural check is reported as a
StructuralViolation carrying the full report: it marks a defect of the
construction route, not a user error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .bounds import entropy_inv
from .codes import (AdditiveCode, LinearCode, index, is_cyclic,
                    is_quasi_cyclic, is_self_dual, rref, reduce_vector)
from .constructions import double_circulant, four_circulant, is_self_dual_dc
from .galois import ExtensionTower, Field, extend, field_create, is_square, prime_power
from .rings import RingElement


class StructuralViolation(RuntimeError):
    """A structural assertion of a construction route failed."""

    def __init__(self, message: str, report: "PipelineReport | None" = None):
        super().__init__(message)
        self.report = report


# ---------------------------------------------------------------------------
# quasi-cyclic -> additive cyclic
# ---------------------------------------------------------------------------

def to_additive(code: LinearCode, tower: ExtensionTower) -> AdditiveCode:
    """Collapse each length-l section of an l-quasi-cyclic codeword into
    one symbol of GF(q^l) via the tower's power basis.

    The image is a base-field-linear code of length m = n/l that is
    closed under the shift whenever the input is l-quasi-cyclic, and it
    has exactly as many words as the input.
    """
    ell = tower.degree
    if tower.base != code.field:
        raise ValueError("tower base must match the code's field")
    if code.n % ell:
        raise ValueError(f"length {code.n} is not a multiple of {ell}")
    if not is_quasi_cyclic(code, ell):
        raise ValueError(f"code is not {ell}-quasi-cyclic")
    m = code.n // ell
    sections = code.gens.reshape(-1, m, ell)
    return AdditiveCode(tower, tower.combine_array(sections))


# ---------------------------------------------------------------------------
# quasi-cyclic -> grid code (two cyclic directions)
# ---------------------------------------------------------------------------

class TwoDCode:
    """Span of m-by-l coefficient arrays; entry (j, i) holds the
    coefficient of x^j y^i."""

    def __init__(self, fld: Field, gens):
        gens = [np.array(g, dtype=np.int32) for g in gens]
        if not gens or gens[0].ndim != 2:
            raise ValueError("expected a non-empty list of 2-D arrays")
        self.field = fld
        self.m, self.ell = gens[0].shape
        for g in gens:
            if g.shape != (self.m, self.ell):
                raise ValueError("mixed array shapes")
        self.gens = gens
        self._flat_rref = None
        self._flat_pivots = None

    def _reduced(self):
        if self._flat_rref is None:
            flat = np.stack([g.reshape(-1) for g in self.gens])
            self._flat_rref, self._flat_pivots = rref(self.field, flat)
        return self._flat_rref, self._flat_pivots

    def contains(self, arr) -> bool:
        R, piv = self._reduced()
        v = np.asarray(arr, dtype=np.int32).reshape(-1)
        return not reduce_vector(self.field, R, piv, v).any()

    def __repr__(self) -> str:
        return f"TwoDCode[{self.m}x{self.ell}] over {self.field!r}"


def to_grid(code: LinearCode, ell: int) -> TwoDCode:
    """Lay each codeword out as its m-by-l coefficient array.

    Pure relabelling: array entry (j, i) is c_{i,j}, so weights and
    cardinality are preserved.
    """
    if code.n % ell:
        raise ValueError(f"length {code.n} is not a multiple of {ell}")
    m = code.n // ell
    return TwoDCode(code.field, [g.reshape(m, ell) for g in code.gens])


def is_ideal_2d(grid: TwoDCode) -> bool:
    """Closure of the span under both cyclic index shifts.

    Multiplication by x rotates the row index j -> j+1, multiplication
    by y the column index i -> i+1; the span is an ideal of the
    two-variable residue ring iff both images stay inside it.
    """
    for g in grid.gens:
        if not grid.contains(np.roll(g, 1, axis=0)):
            return False
        if not grid.contains(np.roll(g, 1, axis=1)):
            return False
    return True


# ---------------------------------------------------------------------------
# CRT re-indexing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IndexMap:
    """Bijection (j, i) -> k in [0, m*l) with k = j (mod m), k = i (mod l)."""

    m: int
    ell: int
    table: np.ndarray = dc_field(compare=False)

    def __call__(self, j: int, i: int) -> int:
        return int(self.table[j % self.m, i % self.ell])


def crt_map(m: int, ell: int) -> IndexMap:
    if math.gcd(m, ell) != 1:
        raise ValueError(f"gcd({m}, {ell}) != 1; no CRT re-indexing")
    table = np.empty((m, ell), dtype=np.int64)
    for k in range(m * ell):
        table[k % m, k % ell] = k
    return IndexMap(m, ell, table)


def flatten(grid: TwoDCode, imap: IndexMap) -> LinearCode:
    """Weight-preserving re-index of grid arrays to length-m*l vectors.

    The single shift T on the output corresponds to rotating both grid
    indices at once, so ideals flatten to cyclic codes.
    """
    if (imap.m, imap.ell) != (grid.m, grid.ell):
        raise ValueError("index map does not match the grid shape")
    rows = []
    for g in grid.gens:
        v = np.zeros(grid.m * grid.ell, dtype=np.int32)
        v[imap.table.reshape(-1)] = g.reshape(-1)
        rows.append(v)
    return LinearCode(grid.field, np.stack(rows))


# ---------------------------------------------------------------------------
# block-doubling and pairing maps
# ---------------------------------------------------------------------------

def antipodal_double(code: LinearCode) -> LinearCode:
    """(c_0, c_1) -> (c_0, c_1, -c_0, -c_1) on a 2-quasi-cyclic code.

    Every weight doubles exactly, so the distance doubles; the result
    is 4-quasi-cyclic of the same dimension.
    """
    if code.n % 2:
        raise ValueError("input length must be even")
    if not is_quasi_cyclic(code, 2):
        raise ValueError("input is not 2-quasi-cyclic")
    neg = code.field.neg_table
    half = code.n // 2
    rows = []
    for g in code.gens:
        sec = g.reshape(half, 2)
        rows.append(np.hstack([sec, neg[sec]]).reshape(-1))
    return LinearCode(code.field, np.stack(rows))


def merge_pairs(code: LinearCode, tower: ExtensionTower) -> LinearCode:
    """(c_0, c_1, c_2, c_3) -> (c_0 + z c_1, c_2 + z c_3) over GF(q^2).

    Alphabet-doubling of a 4-quasi-cyclic code into a 2-quasi-cyclic
    code over the degree-2 tower; the stored code is the tower-field
    row space of the mapped generators.
    """
    if tower.degree != 2:
        raise ValueError("tower degree must be 2")
    if tower.base != code.field:
        raise ValueError("tower base must match the code's field")
    if code.n % 4:
        raise ValueError("input length must be a multiple of 4")
    if not is_quasi_cyclic(code, 4):
        raise ValueError("input is not 4-quasi-cyclic")
    q0 = code.field.q
    quarter = code.n // 4
    rows = []
    for g in code.gens:
        sec = g.reshape(quarter, 4).astype(np.int64)
        merged = np.stack([sec[:, 0] + q0 * sec[:, 1],
                           sec[:, 2] + q0 * sec[:, 3]], axis=1)
        rows.append(merged.reshape(-1).astype(np.int32))
    return LinearCode(tower.field, np.stack(rows))


def lift_scalars(code: LinearCode, target) -> LinearCode:
    """View a code over a subfield as a code over an extension built on it.

    With power-basis towers the embedding leaves encodings unchanged;
    dimension is preserved and (verified empirically in the test suite)
    so is the minimum distance.
    """
    if isinstance(target, ExtensionTower):
        tower = target
    elif isinstance(target, Field):
        if target == code.field:
            return code
        if target.base != code.field:
            raise ValueError("no power-basis embedding into the target field")
        return LinearCode(target, code.gens.copy())
    else:
        raise TypeError("target must be a Field or an ExtensionTower")
    if tower.base != code.field:
        raise ValueError("tower base must match the code's field")
    return LinearCode(tower.field, code.gens.copy())


# ---------------------------------------------------------------------------
# pipeline reports
# ---------------------------------------------------------------------------

@dataclass
class PipelineReport:
    """Flat record of one construction run; ``ok`` collects every
    structural assertion the route promises."""

    pipeline: str
    q: int
    m: int
    ell: int
    input_n: int
    input_k: int
    input_d: int
    self_dual_input: bool
    ideal_2d: bool
    output_n: int
    output_k: int
    output_d: int
    output_cyclic: bool
    output_index: int
    weights_match: bool
    rate: float
    delta: float
    gv_delta_qc: float
    gv_delta_add: float
    extras: dict = dc_field(default_factory=dict)

    @property
    def assertions(self) -> dict[str, bool]:
        out = {"ideal_2d": self.ideal_2d,
               "output_cyclic": self.output_cyclic,
               "weights_match": self.weights_match}
        out.update({k: v for k, v in self.extras.items() if isinstance(v, bool)})
        return out

    @property
    def ok(self) -> bool:
        return all(self.assertions.values())

    def to_text(self) -> str:
        def fmt(v):
            if isinstance(v, bool):
                return "true" if v else "false"
            if isinstance(v, float):
                return f"{v:.12g}"
            return str(v)

        keys = ["pipeline", "q", "m", "ell", "input_n", "input_k", "input_d",
                "self_dual_input", "ideal_2d", "output_n", "output_k",
                "output_d", "output_cyclic", "output_index", "weights_match",
                "rate", "delta", "gv_delta_qc", "gv_delta_add"]
        lines = [f"{k} {fmt(getattr(self, k))}" for k in keys]
        lines += [f"{k} {fmt(v)}" for k, v in sorted(self.extras.items())]
        return "\n".join(lines) + "\n"


def _ring_arg(fld: Field, m: int, a) -> RingElement:
    if isinstance(a, RingElement):
        if a.field != fld or a.m != m:
            raise ValueError("ring element does not match the requested ring")
        return a
    coeffs = list(a)
    if len(coeffs) > m:
        raise ValueError("too many coefficients for the requested co-index")
    coeffs += [0] * (m - len(coeffs))
    return RingElement(fld, coeffs)


def _pipeline_common(name, q, m, ell, input_code, pre_grid, grid_code, out,
                     extras, budget) -> PipelineReport:
    d_in = input_code.min_distance(budget)
    wd_pre = pre_grid.weight_distribution(budget)
    wd_out = out.weight_distribution(budget)
    d_out = int(np.nonzero(wd_out[1:])[0][0]) + 1 if wd_out[1:].any() else 0
    gv_qc = entropy_inv(out.field.q, 1.0 - 1.0 / ell)
    return PipelineReport(
        pipeline=name, q=q, m=m, ell=ell,
        input_n=input_code.n, input_k=input_code.k, input_d=d_in,
        self_dual_input=is_self_dual(input_code),
        ideal_2d=is_ideal_2d(grid_code),
        output_n=out.n, output_k=out.k, output_d=d_out,
        output_cyclic=is_cyclic(out), output_index=index(out),
        weights_match=bool(np.array_equal(wd_pre, wd_out)),
        rate=out.k / out.n, delta=d_out / out.n,
        gv_delta_qc=gv_qc, gv_delta_add=gv_qc / ell,
        extras=extras)


def _finish(report: PipelineReport, out: LinearCode, strict: bool):
    if strict and not report.ok:
        failed = [k for k, v in report.assertions.items() if not v]
        raise StructuralViolation(
            f"pipeline {report.pipeline} structural check(s) failed: "
            + ", ".join(failed), report)
    return report, out


def pipeline_ell2(q: int, m: int, a, *, strict: bool = True,
                  budget: int | None = None) -> tuple[PipelineReport, LinearCode]:
    """Self-dual double circulant -> grid -> flattened length-2m code.

    Requires m odd and a self-dual generator.  The structural promise
    is that the grid image is an ideal and the flattened code is
    cyclic; both are re-verified on every run.
    """
    p, e = prime_power(q)
    fld = field_create(p, e)
    if m % 2 == 0:
        raise ValueError("m must be odd (the re-indexing needs gcd(m, 2) = 1)")
    a = _ring_arg(fld, m, a)
    if not is_self_dual_dc(a):
        raise ValueError("a(x) a(x^-1) != -1: double circulant is not self-dual")
    code = double_circulant(a)
    grid = to_grid(code, 2)
    out = flatten(grid, crt_map(m, 2))
    report = _pipeline_common("ell2", q, m, 2, code, code, grid, out, {}, budget)
    return _finish(report, out, strict)


def pipeline_p1mod4(q: int, m: int, a, *, strict: bool = True,
                    budget: int | None = None) -> tuple[PipelineReport, LinearCode]:
    """Self-dual double circulant, doubled with negation, then flattened
    to a length-4m code; needs -1 to be a square in GF(q)."""
    p, e = prime_power(q)
    fld = field_create(p, e)
    if m % 2 == 0:
        raise ValueError("m must be odd (the re-indexing needs gcd(m, 4) = 1)")
    if not is_square(fld, fld.neg(1)):
        raise ValueError(f"-1 is not a square in GF({q})")
    a = _ring_arg(fld, m, a)
    if not is_self_dual_dc(a):
        raise ValueError("a(x) a(x^-1) != -1: double circulant is not self-dual")
    code = double_circulant(a)
    doubled = antipodal_double(code)
    grid = to_grid(doubled, 4)
    out = flatten(grid, crt_map(m, 4))
    d_in = code.min_distance(budget)
    d_doubled = doubled.min_distance(budget)
    extras = {"d_base": d_in, "d_doubled": d_doubled,
              "doubling_exact": d_doubled == 2 * d_in}
    report = _pipeline_common("p1mod4", q, m, 4, code, doubled, grid, out,
                              extras, budget)
    return _finish(report, out, strict)


def pipeline_p3mod4(q_base: int, m: int, a, b, *, strict: bool = True,
                    budget: int | None = None) -> tuple[PipelineReport, LinearCode]:
    """Self-dual four circulant over GF(q0), paired into GF(q0^2),
    doubled with negation, then flattened to a length-4m code.

    The report records the measured output dimension over GF(q0^2) and
    the distance inequalities d(paired) >= d/2 and d(doubled) >= d.
    """
    p, e = prime_power(q_base)
    fld = field_create(p, e)
    if m % 2 == 0:
        raise ValueError("m must be odd (the re-indexing needs gcd(m, 4) = 1)")
    a = _ring_arg(fld, m, a)
    b = _ring_arg(fld, m, b)
    code = four_circulant(a, b)
    if not is_self_dual(code):
        raise ValueError("four-circulant code is not self-dual")
    tower = extend(fld, 2)
    paired = merge_pairs(code, tower)
    doubled = antipodal_double(paired)
    grid = to_grid(doubled, 4)
    out = flatten(grid, crt_map(m, 4))
    d_in = code.min_distance(budget)
    d_paired = paired.min_distance(budget)
    d_doubled = doubled.min_distance(budget)
    extras = {
        "d_base": d_in,
        "d_paired": d_paired,
        "d_doubled": d_doubled,
        "paired_size_ok": paired.k == code.k // 2,
        "d_paired_ok": 2 * d_paired >= d_in,
        "d_doubled_ok": d_doubled >= d_in,
        "output_rank": out.k,
    }
    report = _pipeline_common("p3mod4", q_base, m, 4, code, doubled, grid,
                              out, extras, budget)
    return _finish(report, out, strict)
