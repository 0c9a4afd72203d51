"""Command-line front end and the canonical code file format.

Subcommands: artin, search, pipeline, verify, bounds, sample-qc.
Exit codes: 0 success, 1 structural verification failure, 2 bad
arguments or unreadable input.  CIRCFORGE_BUDGET overrides the
codeword-enumeration budget.

Code file grammar (text, canonical, line-oriented):

    p <prime>
    e <extension degree>
    modulus[ <c_0> ... <c_{e-1}>]      (bare "modulus" when e = 1)
    n <length>
    row <enc> ... <enc>                (one line per generator row)

Encodings are the canonical integers in [0, q); serialize(parse(text))
reproduces the bytes exactly.
"""

from __future__ import annotations

import argparse
import sys

from .bounds import gv_targets
from .codes import (BudgetError, LinearCode, enumeration_budget,
                    is_quasi_cyclic, is_self_dual)
from .constructions import (double_circulant, four_circulant, random_qc,
                            search_dcsd, search_fcsd)
from .galois import field_create, field_from_parts, prime_power
from .rings import artin_primes
from .transforms import (StructuralViolation, pipeline_ell2, pipeline_p1mod4,
                         pipeline_p3mod4, to_additive)


# ---------------------------------------------------------------------------
# code file format
# ---------------------------------------------------------------------------

def serialize_code(code: LinearCode) -> str:
    header = code.field.serialize()
    lines = [f"p {header['p']}", f"e {header['e']}"]
    if header["modulus"]:
        lines.append("modulus " + " ".join(str(c) for c in header["modulus"]))
    else:
        lines.append("modulus")
    lines.append(f"n {code.n}")
    for row in code.gens:
        lines.append("row " + " ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


class CodeFileError(ValueError):
    pass


def parse_code(text: str) -> LinearCode:
    lines = text.splitlines()
    if len(lines) < 5:
        raise CodeFileError("truncated code file")

    def take(idx: int, key: str) -> list[str]:
        parts = lines[idx].split(" ")
        if parts[0] != key:
            raise CodeFileError(f"expected '{key}' on line {idx + 1}")
        return parts[1:]

    try:
        p = int(take(0, "p")[0])
        e = int(take(1, "e")[0])
        mod = [int(c) for c in take(2, "modulus")]
        n = int(take(3, "n")[0])
    except (IndexError, ValueError) as exc:
        raise CodeFileError(f"malformed header: {exc}") from None
    try:
        fld = field_from_parts(p, e, mod)
    except ValueError as exc:
        raise CodeFileError(str(exc)) from None
    rows = []
    for idx in range(4, len(lines)):
        if not lines[idx]:
            raise CodeFileError(f"blank line {idx + 1} in code file")
        entries = take(idx, "row")
        try:
            row = [int(x) for x in entries]
        except ValueError as exc:
            raise CodeFileError(f"malformed row: {exc}") from None
        if len(row) != n:
            raise CodeFileError(f"row length {len(row)} != n = {n}")
        if any(not 0 <= x < fld.q for x in row):
            raise CodeFileError("row entry outside [0, q)")
        rows.append(row)
    if not rows:
        raise CodeFileError("code file holds no generator rows")
    code = LinearCode(fld, rows)
    if code.k == 0:
        raise CodeFileError("zero-dimensional code")
    return code


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _parse_poly(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad polynomial argument {text!r}: {exc}") from None


def _cmd_artin(args) -> int:
    for m in artin_primes(args.q, args.limit):
        print(m)
    return 0


def _cmd_search(args) -> int:
    budget = args.budget
    if args.kind == "dcsd":
        found = search_dcsd(args.q, args.m, budget)
        codes = [double_circulant(a) for a in found]
        labels = [",".join(str(c) for c in a.coeffs) for a in found]
    else:
        found = search_fcsd(args.q, args.m, budget)
        codes = [four_circulant(a, b) for a, b in found]
        labels = [",".join(str(c) for c in a.coeffs) + ";"
                  + ",".join(str(c) for c in b.coeffs) for a, b in found]
    best = None
    enum_budget = enumeration_budget()
    for code in codes:
        d = code.min_distance(enum_budget)
        best = d if best is None else max(best, d)
    if args.out:
        import pathlib
        outdir = pathlib.Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, code in enumerate(codes):
            path = outdir / f"{args.kind}_q{args.q}_m{args.m}_{i:04d}.code"
            path.write_text(serialize_code(code))
    for label in labels:
        print(f"found {label}")
    print(f"{args.kind} q={args.q} m={args.m} found={len(codes)} "
          f"best_d={best if best is not None else '-'}")
    return 0


def _cmd_pipeline(args) -> int:
    budget = enumeration_budget()
    if args.kind == "ell2":
        report, out = pipeline_ell2(args.q, args.m, _parse_poly(args.a),
                                    strict=False, budget=budget)
    elif args.kind == "p1mod4":
        report, out = pipeline_p1mod4(args.q, args.m, _parse_poly(args.a),
                                      strict=False, budget=budget)
    else:
        if args.b is None:
            raise ValueError("pipeline p3mod4 needs --b")
        report, out = pipeline_p3mod4(args.q, args.m, _parse_poly(args.a),
                                      _parse_poly(args.b), strict=False,
                                      budget=budget)
    sys.stdout.write(report.to_text())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(serialize_code(out))
    return 0 if report.ok else 1


def _cmd_verify(args) -> int:
    try:
        with open(args.codefile) as fh:
            code = parse_code(fh.read())
    except OSError as exc:
        raise CodeFileError(f"cannot read {args.codefile}: {exc}") from None
    pred = args.predicate
    if pred == "cyclic":
        print(f"cyclic {'true' if is_quasi_cyclic(code, 1) else 'false'}")
    elif pred.startswith("qc:"):
        ell = int(pred[3:])
        print(f"qc {ell} {'true' if is_quasi_cyclic(code, ell) else 'false'}")
    elif pred == "selfdual":
        print(f"selfdual {'true' if is_self_dual(code) else 'false'}")
    elif pred == "distance":
        print(f"distance {code.min_distance(enumeration_budget())}")
    else:
        raise ValueError(f"unknown predicate {pred!r}")
    return 0


def _cmd_bounds(args) -> int:
    d_qc, d_add = gv_targets(args.q, args.ell)
    print(f"delta_qc {d_qc:.12g}")
    print(f"delta_add {d_add:.12g}")
    return 0


def _cmd_sample_qc(args) -> int:
    code = random_qc(args.q, args.m, args.ell, args.seed)
    p, e = prime_power(args.q)
    from .galois import extend
    tower = extend(field_create(p, e), args.ell)
    add = to_additive(code, tower)
    budget = enumeration_budget()
    d_qc = code.min_distance(budget)
    d_add = add.min_distance(budget)
    from .codes import is_additive_cyclic
    cyc = is_additive_cyclic(add)
    bound_ok = args.ell * d_add >= d_qc
    print(f"q {args.q}")
    print(f"m {args.m}")
    print(f"ell {args.ell}")
    print(f"seed {args.seed}")
    print(f"qc_n {code.n}")
    print(f"qc_k {code.k}")
    print(f"qc_d {d_qc}")
    print(f"additive_k_q {add.k_q}")
    print(f"additive_d {d_add}")
    print(f"additive_cyclic {'true' if cyc else 'false'}")
    print(f"distance_bound_ok {'true' if bound_ok else 'false'}")
    return 0 if (cyc and bound_ok) else 1


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="circforge")
    sub = ap.add_subparsers(dest="command", required=True)

    p_artin = sub.add_parser("artin", help="primes m <= limit with q primitive mod m")
    p_artin.add_argument("--q", type=int, required=True)
    p_artin.add_argument("--limit", type=int, required=True)
    p_artin.set_defaults(func=_cmd_artin)

    p_search = sub.add_parser("search", help="exhaustive self-dual searches")
    p_search.add_argument("kind", choices=["dcsd", "fcsd"])
    p_search.add_argument("--q", type=int, required=True)
    p_search.add_argument("--m", type=int, required=True)
    p_search.add_argument("--budget", type=int, default=1 << 20,
                          help="candidate cap (default %(default)s)")
    p_search.add_argument("--out", help="directory for emitted code files")
    p_search.set_defaults(func=_cmd_search)

    p_pipe = sub.add_parser("pipeline", help="run a construction pipeline")
    p_pipe.add_argument("kind", choices=["ell2", "p1mod4", "p3mod4"])
    p_pipe.add_argument("--q", type=int, required=True)
    p_pipe.add_argument("--m", type=int, required=True)
    p_pipe.add_argument("--a", required=True, help="comma-separated encodings")
    p_pipe.add_argument("--b", help="comma-separated encodings (p3mod4)")
    p_pipe.add_argument("--out", help="file for the produced code")
    p_pipe.set_defaults(func=_cmd_pipeline)

    p_verify = sub.add_parser("verify", help="check a predicate on a code file")
    p_verify.add_argument("codefile")
    p_verify.add_argument("--predicate", required=True,
                          help="cyclic | qc:<l> | selfdual | distance")
    p_verify.set_defaults(func=_cmd_verify)

    p_bounds = sub.add_parser("bounds", help="rate-1/l distance targets")
    p_bounds.add_argument("--q", type=int, required=True)
    p_bounds.add_argument("--ell", type=int, required=True)
    p_bounds.set_defaults(func=_cmd_bounds)

    p_sample = sub.add_parser("sample-qc", help="seeded random QC sample plus checks")
    p_sample.add_argument("--q", type=int, required=True)
    p_sample.add_argument("--m", type=int, required=True)
    p_sample.add_argument("--ell", type=int, required=True)
    p_sample.add_argument("--seed", type=int, default=0)
    p_sample.set_defaults(func=_cmd_sample_qc)

    return ap


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except StructuralViolation as exc:
        if exc.report is not None:
            sys.stdout.write(exc.report.to_text())
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, BudgetError, CodeFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
