"""Command-line front end.

Exit codes: 0 success, 2 parse/usage error, 3 domain error (zero element,
non-squarefree d, n > m, ...), 4 golden-table mismatch or failed internal
invariant.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import tables
from .cyclo import cyclo_profile
from .density import DensityValue, InvariantError, analyze, density, density_series
from .field import DomainError, FieldMismatch, ParseError, parse_element, parse_field
from .kummer import KummerQuery, kummer_relative_degree, total_degree
from .roots import Case, decompose
from .scan import empirical_density

CSV_HEADER = ["field", "a", "ell", "n", "exact", "empirical", "abs_error"]


def _approx(q: Fraction) -> str:
    return f"{q.numerator / q.denominator:.6f}"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ordens",
        description="Exact densities of primes by the l-adic valuation of an "
                    "element's multiplicative order, over Q and quadratic fields.")
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, element=True):
        sp.add_argument("--ell", type=int, required=True, help="prime l")
        sp.add_argument("--field", required=True, help="Q or 'Q(sqrt D)'")
        if element:
            sp.add_argument("--a", required=True, help="element text")

    d = sub.add_parser("density", help="exact density for a prescribed valuation")
    common(d)
    d.add_argument("--val", type=int, default=0, help="order valuation n (default 0)")

    k = sub.add_parser("kummer", help="relative and total Kummer degrees")
    common(k)
    k.add_argument("--m", type=int, required=True)
    k.add_argument("--n", type=int, required=True)

    dec = sub.add_parser("decompose", help="power-times-unit normal form")
    common(dec)

    prof = sub.add_parser("profile", help="cyclotomic tower parameters")
    common(prof, element=False)

    s = sub.add_parser("scan", help="empirical density over primes of the field")
    common(s)
    s.add_argument("--bound", type=int, default=10 ** 5, help="norm bound")
    s.add_argument("--compare", action="store_true",
                   help="include exact densities and the max error")

    t = sub.add_parser("tables", help="recompute a golden table and diff it")
    t.add_argument("--which", type=int, choices=(1, 2, 3, 4), required=True)

    sub.add_parser("selfcheck", help="golden tables plus closed-vs-series spot checks")
    return p


def _emit_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.get(c, "") for c in CSV_HEADER])
    return buf.getvalue().rstrip("\n")


def _print_density(out, fmt: str, field: str, a: str, ell: int, n: int,
                   dv: DensityValue) -> None:
    if fmt == "plain":
        print(str(dv.value), file=out)
    elif fmt == "csv":
        print(_emit_csv([{"field": field, "a": a, "ell": ell, "n": n,
                          "exact": str(dv.value)}]), file=out)
    else:
        print(json.dumps({
            "field": field, "a": a, "ell": ell, "n": n,
            "exact": str(dv.value), "approx": _approx(dv.value),
            "method": dv.method, "branch": dv.branch,
            "params": {k: str(v) for k, v in dv.params},
        }, sort_keys=True), file=out)


def _cmd_density(args, out) -> int:
    field = parse_field(args.field)
    a = parse_element(args.a, field)
    dv = density(a, args.ell, args.val)
    _print_density(out, args.format, args.field, args.a, args.ell, args.val, dv)
    return 0


def _cmd_kummer(args, out) -> int:
    field = parse_field(args.field)
    a = parse_element(args.a, field)
    dec, prof, special = analyze(a, args.ell)
    q = KummerQuery(args.ell, args.m, args.n, dec, prof, special)
    rel, tot = kummer_relative_degree(q), total_degree(q)
    if args.format == "json":
        print(json.dumps({"relative_degree": rel, "total_degree": tot,
                          "m": args.m, "n": args.n, "special": special},
                         sort_keys=True), file=out)
    else:
        print(f"relative_degree {rel}", file=out)
        print(f"total_degree {tot}", file=out)
    return 0


def _cmd_decompose(args, out) -> int:
    field = parse_field(args.field)
    a = parse_element(args.a, field)
    dec = decompose(a, args.ell)
    if dec.case is Case.ROOT_OF_UNITY:
        payload = {"case": dec.case.value}
    else:
        payload = {"case": dec.case.value, "d": dec.depth, "b": str(dec.base),
                   "xi": str(dec.unit), "r": dec.unit_level}
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        print(" ".join(f"{k}={v}" for k, v in payload.items()), file=out)
    return 0


def _cmd_profile(args, out) -> int:
    field = parse_field(args.field)
    prof = cyclo_profile(field, args.ell)
    payload = {
        "field": str(field), "ell": prof.ell,
        "has_zeta_ell": prof.has_zeta_ell, "has_zeta4": prof.has_zeta4,
        "degree": prof.degree, "stall": prof.stall,
        "zeta4_stall": prof.zeta4_stall,
        "tower": prof.tower.value if prof.tower else None,
    }
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        print(" ".join(f"{k}={v}" for k, v in payload.items()), file=out)
    return 0


def _cmd_scan(args, out) -> int:
    field = parse_field(args.field)
    a = parse_element(args.a, field)
    rep = empirical_density(a, args.ell, args.bound)
    if args.format == "json":
        payload = {
            "field": args.field, "a": args.a, "ell": args.ell,
            "bound": rep.bound, "counted": rep.counted,
            "excluded": list(rep.excluded),
            "histogram": {str(n): c for n, c in rep.histogram.items()},
            "empirical": {str(n): str(v) for n, v in rep.empirical.items()},
        }
        if args.compare:
            payload["exact"] = {str(n): str(v) for n, v in rep.exact.items()}
            payload["max_abs_error"] = str(rep.max_abs_error)
            payload["max_abs_error_approx"] = _approx(rep.max_abs_error)
        print(json.dumps(payload, sort_keys=True), file=out)
    elif args.format == "csv":
        rows = []
        for n in sorted(rep.empirical):
            row = {"field": args.field, "a": args.a, "ell": args.ell, "n": n,
                   "empirical": str(rep.empirical[n])}
            if args.compare:
                row["exact"] = str(rep.exact[n])
                row["abs_error"] = str(abs(rep.empirical[n] - rep.exact[n]))
            rows.append(row)
        print(_emit_csv(rows), file=out)
    else:
        print(f"counted {rep.counted} slots, excluded primes {list(rep.excluded)}",
              file=out)
        for n in sorted(rep.empirical):
            line = (f"n={n} count={rep.histogram.get(n, 0)} "
                    f"empirical={rep.empirical[n]} ({_approx(rep.empirical[n])})")
            if args.compare:
                line += f" exact={rep.exact[n]} ({_approx(rep.exact[n])})"
            print(line, file=out)
        if args.compare:
            print(f"max_abs_error {rep.max_abs_error} "
                  f"({_approx(rep.max_abs_error)})", file=out)
    return 0


def _cmd_tables(args, out) -> int:
    results, diffs = tables.check_table(args.which)
    if args.format == "csv":
        rows = [{"field": r.field, "a": r.a, "ell": r.ell, "n": r.n,
                 "exact": str(got)} for r, got in results]
        print(_emit_csv(rows), file=out)
    elif args.format == "json":
        print(json.dumps({
            "table": args.which,
            "rows": [{"field": r.field, "a": r.a, "ell": r.ell, "n": r.n,
                      "expected": str(r.expected), "computed": str(got)}
                     for r, got in results],
            "diffs": len(diffs),
        }, sort_keys=True), file=out)
    else:
        for r, got in results:
            mark = "" if got == r.expected else f"  MISMATCH expected {r.expected}"
            print(f"{r.field}\t{r.a}\tl={r.ell}\tn={r.n}\t{got}{mark}", file=out)
        print(f"{len(results)} rows, {len(diffs)} diffs", file=out)
    return 4 if diffs else 0


def _cmd_selfcheck(args, out) -> int:
    failures = 0
    for which in (1, 2, 3, 4):
        _, diffs = tables.check_table(which)
        status = "ok" if not diffs else f"{len(diffs)} diffs"
        if diffs:
            failures += 1
        print(f"table {which}: {status}", file=out)
    spot = [("Q(sqrt 3)", "2", 3), ("Q(sqrt -3)", "8*zeta3", 3),
            ("Q(sqrt -1)", "4*i", 2), ("Q(sqrt 3)", "-81", 2),
            ("Q", "2", 2), ("Q(sqrt -2)", "12", 2)]
    for ftext, atext, ell in spot:
        a = parse_element(atext, parse_field(ftext))
        closed = density(a, ell).value
        series = density_series(a, ell).value
        ok = closed == series
        if not ok:
            failures += 1
        print(f"series check {ftext} a={atext} l={ell}: closed={closed} "
              f"series={series} {'ok' if ok else 'MISMATCH'}", file=out)
    print(f"selfcheck {'passed' if not failures else 'FAILED'}", file=out)
    return 4 if failures else 0


_DISPATCH = {
    "density": _cmd_density,
    "kummer": _cmd_kummer,
    "decompose": _cmd_decompose,
    "profile": _cmd_profile,
    "scan": _cmd_scan,
    "tables": _cmd_tables,
    "selfcheck": _cmd_selfcheck,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "ell", None) is not None and not _is_prime(args.ell):
        print(f"error: --ell must be prime, got {args.ell}", file=sys.stderr)
        return 3
    try:
        return _DISPATCH[args.command](args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, FieldMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InvariantError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return 4


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
