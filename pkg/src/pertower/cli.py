"""Command line interface.

Subcommands: ``count``, ``tower``, ``limit``, ``graph``.  Run
``pertower <cmd> --help`` for flags.

Exit codes:
    0  success
    1  I/O failure writing output
    2  invalid arguments (including limits outside the implemented scope)
    3  field too large for the enumeration budget
    4  analytic and brute-force counts disagree
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .census import analytic_count, brute_census, functional_graph
from .dynmaps import MapSpec, parse_map
from .ffield import MAX_ENUM_ENV, EnumerationBudgetError, build_field, check_enumerable
from .limits import TowerQuery, limit, render_decimal, tower

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4

METHODS = ("analytic", "brute", "both")


class CountMismatch(RuntimeError):
    pass


@dataclass(frozen=True)
class ReportRow:
    n: int
    field: str
    count: int
    ratio: Fraction
    rendered: str
    method: str

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "field": self.field,
            "count": self.count,
            "ratio": {"num": self.ratio.numerator, "den": self.ratio.denominator},
            "rendered": self.rendered,
            "method": self.method,
        }


def make_row(p: int, n: int, fmap: MapSpec, method: str, max_enum: int | None,
             rounding: str = "half-even") -> ReportRow:
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    counts = {}
    if method in ("analytic", "both"):
        counts["analytic"] = analytic_count(p, n, fmap)
    if method in ("brute", "both"):
        check_enumerable(p, n, max_enum)
        counts["brute"] = brute_census(build_field(p, n), fmap, max_enum).periodic_count
    if len(set(counts.values())) != 1:
        raise CountMismatch(f"F_{{{p}^{n}}} {fmap}: counts disagree {counts}")
    count = next(iter(counts.values()))
    ratio = Fraction(count, p**n)
    return ReportRow(n, f"F_{{{p}^{n}}}", count, ratio, render_decimal(ratio, rounding=rounding), method)


def _parse_nu(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"--nu must be comma separated integers, got {text!r}") from None


def _query(args) -> TowerQuery:
    return TowerQuery(args.p, parse_map(args.map), args.delta, _parse_nu(args.nu), args.constraint)


def _limit_json(res) -> dict:
    return {
        "num": res.value.numerator,
        "den": res.value.denominator,
        "rendered": render_decimal(res.value),
        "I": list(res.I) if res.I is not None else None,
        "J": list(res.J) if res.J is not None else None,
        "extension": res.extension,
    }


def _primes(spec, idx) -> str:
    if idx is None:
        return "-"
    return "{" + ", ".join(str(spec.primes[i]) for i in idx) + "}" if idx else "∅"


def cmd_count(args, out) -> None:
    fmap = parse_map(args.map)
    row = make_row(args.p, args.n, fmap, args.method, args.max_enum, args.rounding)
    if args.format == "json":
        doc = {"command": "count", "p": args.p, "n": args.n, "map": str(fmap), "row": row.to_json()}
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"{row.field} {fmap}: count={row.count} ratio={row.ratio} "
                  f"({row.rendered}) method={row.method}\n")


def cmd_tower(args, out) -> None:
    q = _query(args)
    ns = tower(q, args.rows)
    rows = [make_row(q.p, n, q.fmap, args.method, args.max_enum, args.rounding) for n in ns]
    lim = limit(q)
    lim_str = render_decimal(lim.value, rounding=args.rounding)
    if args.format == "json":
        doc = {
            "command": "tower", "p": q.p, "map": str(q.fmap), "delta": q.delta,
            "nu": list(q.nu), "constraint": q.constraint,
            "rows": [r.to_json() for r in rows], "limit": _limit_json(lim),
        }
        out.write(json.dumps(doc) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(["n", "field", "count", "num", "den", "decimal", "method"])
        for r in rows:
            w.writerow([r.n, r.field, r.count, r.ratio.numerator, r.ratio.denominator, r.rendered, r.method])
        w.writerow(["limit", "", "", lim.value.numerator, lim.value.denominator, lim_str, "closed-form"])
        out.write(buf.getvalue())
    else:
        out.write(f"#Per({q.fmap}, F_{{{q.p}^n}}) / {q.p}^n, delta = {q.delta}, "
                  f"nu = {q.nu}, rule = {q.constraint}\n\n")
        out.write("| n | field | #Per | ratio | decimal |\n|---|---|---|---|---|\n")
        for r in rows:
            out.write(f"| {r.n} | {r.field} | {r.count} | {r.ratio} | {r.rendered} |\n")
        out.write(f"| limit | | | {lim.value} | {lim_str} |\n")


def cmd_limit(args, out) -> None:
    q = _query(args)
    res = limit(q)
    if args.format == "json":
        doc = {"command": "limit", "p": q.p, "map": str(q.fmap), "delta": q.delta,
               "nu": list(q.nu), "constraint": q.constraint, "limit": _limit_json(res)}
        out.write(json.dumps(doc) + "\n")
        return
    out.write(f"{res.value} = {render_decimal(res.value)}\n")
    if res.J is not None:
        out.write(f"I = {_primes(q.spec, res.I)}  J = {_primes(q.spec, res.J)}\n")
    if res.extension:
        out.write("note: even composite degree, extrapolated closed form\n")


def graph_dot(p: int, n: int, fmap: MapSpec, max_enum: int | None = None) -> str:
    """Graphviz source for the functional graph; byte-stable for fixed inputs."""
    check_enumerable(p, n, max_enum)
    field = build_field(p, n)
    g = functional_graph(field, fmap, max_enum)
    modulus = ",".join(str(c) for c in field.modulus)
    lines = [
        "digraph G {",
        f'  graph [p="{p}", n="{n}", map="{fmap}", modulus="{modulus}"];',
    ]
    for i, per in enumerate(g.periodic.tolist()):
        lines.append(f'  {i} [periodic="{"true" if per else "false"}"];')
    for i, j in enumerate(g.image.tolist()):
        lines.append(f"  {i} -> {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_graph(args, out) -> None:
    dot = graph_dot(args.p, args.n, parse_map(args.map), args.max_enum)
    if args.out in (None, "-"):
        out.write(dot)
        return
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dot)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pertower",
        description="Periodic points of z^t and Chebyshev T_t over finite fields.",
        epilog=f"The enumeration budget may also be set with ${MAX_ENUM_ENV}.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, with_n):
        sp.add_argument("--p", type=int, required=True, help="field characteristic")
        if with_n:
            sp.add_argument("--n", type=int, required=True, help="extension degree")
        sp.add_argument("--map", required=True, help="power:T or cheb:T")
        sp.add_argument("--max-enum", type=int, default=None, help="enumeration budget (default 2000000)")

    def rounding_flag(sp):
        sp.add_argument("--rounding", choices=("half-even", "down"), default="half-even",
                        help="last-digit rule for decimal output")

    def tower_flags(sp):
        sp.add_argument("--delta", type=int, default=None, help="gcd(Delta, n); defaults to Delta")
        sp.add_argument("--nu", default=None, help="comma separated valuations, one per prime of T")
        sp.add_argument("--constraint", choices=("gcd", "delta-divides-2n"), default=None)

    sp = sub.add_parser("count", help="periodic point count on one field")
    common(sp, True)
    sp.add_argument("--method", choices=METHODS, default="analytic")
    sp.add_argument("--format", choices=("plain", "json"), default="plain")
    rounding_flag(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("tower", help="proportions along a tower, plus the limit")
    common(sp, False)
    tower_flags(sp)
    sp.add_argument("--rows", type=int, default=4)
    sp.add_argument("--method", choices=METHODS, default="analytic")
    sp.add_argument("--format", choices=("md", "csv", "json"), default="md")
    rounding_flag(sp)
    sp.set_defaults(func=cmd_tower)

    sp = sub.add_parser("limit", help="closed-form limiting proportion")
    common(sp, False)
    tower_flags(sp)
    sp.add_argument("--format", choices=("plain", "json"), default="plain")
    sp.set_defaults(func=cmd_limit)

    sp = sub.add_parser("graph", help="write the functional graph as DOT")
    common(sp, True)
    sp.add_argument("--out", default="-", help="output path, '-' for stdout")
    sp.set_defaults(func=cmd_graph)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except EnumerationBudgetError as exc:
        print(f"pertower: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CountMismatch as exc:
        print(f"pertower: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except OSError as exc:
        print(f"pertower: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"pertower: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
