"""Command-line surface for building, combining, analyzing and verifying
Riordan arrays.

Exit codes: 0 success, 1 verification mismatch or failed check, 2 parse
error, 3 invariant violation, 4 construction precondition failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arrays import RiordanPair, TriMatrix
from .constructions import (
    FAMILY_KINDS,
    family_from_f,
    power_pseudo,
    pseudo_from_g,
    stochastic_from_g,
)
from .errors import (
    ExprSyntaxError,
    PreconditionError,
    RiordanError,
    UnknownNameError,
)
from .exprs import series_from_text
from .fixtures import all_fixtures, fixture_by_id
from .production import extract_az
from .series import TruncSeries, rational_str

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_PRECONDITION = 4


# ---- rendering ----

def _table(rows: list[list[str]]) -> str:
    widths: dict[int, int] = {}
    for row in rows:
        for k, cell in enumerate(row):
            widths[k] = max(widths.get(k, 0), len(cell))
    return "\n".join(
        "  ".join(cell.rjust(widths[k]) for k, cell in enumerate(row)).rstrip()
        for row in rows
    )


def _triangle_payload(tri: TriMatrix, g_text: str, f: TruncSeries, order: int) -> dict:
    return {
        "rows": [[rational_str(c) for c in row] for row in tri.rows],
        "g": g_text,
        "f_coeffs": [rational_str(c) for c in f.coeffs],
        "order": order,
    }


def _print_triangle(tri: TriMatrix, fmt: str, g_text: str, f: TruncSeries,
                    order: int, row_sums: bool = False) -> None:
    cells = [[rational_str(c) for c in row] for row in tri.rows]
    if fmt == "json":
        payload = _triangle_payload(tri, g_text, f, order)
        if row_sums:
            payload["row_sums"] = [rational_str(s) for s in tri.row_sums()]
        print(json.dumps(payload))
    elif fmt == "csv":
        if row_sums:
            cells = [row + [rational_str(s)]
                     for row, s in zip(cells, tri.row_sums())]
        print("\n".join(",".join(row) for row in cells))
    else:
        if row_sums:
            width = max(len(row) for row in cells)
            cells = [row + [""] * (width - len(row)) + ["|", rational_str(s)]
                     for row, s in zip(cells, tri.row_sums())]
        print(_table(cells))


def _print_coeffs(coeffs, fmt: str, order: int, key: str = "coeffs") -> None:
    strs = [rational_str(c) for c in coeffs]
    if fmt == "json":
        print(json.dumps({key: strs, "order": order}))
    elif fmt == "csv":
        print(",".join(strs))
    else:
        print(", ".join(strs))


# ---- command handlers ----

def _pair_from_args(args, g_text: str, f_text: str, warn_stretched: bool = False) -> RiordanPair:
    g = series_from_text(g_text, args.order)
    f = series_from_text(f_text, args.order)
    pair = RiordanPair(g, f)
    if warn_stretched and not pair.proper:
        print("warning: stretched pair (f'(0) = 0); group operations unavailable",
              file=sys.stderr)
    return pair


def cmd_show(args) -> int:
    pair = _pair_from_args(args, args.g, args.f, warn_stretched=True)
    _print_triangle(pair.expand(args.rows), args.format, args.g, pair.f, args.order)
    return EXIT_OK


def cmd_mul(args) -> int:
    left = _pair_from_args(args, args.g1, args.f1)
    right = _pair_from_args(args, args.g2, args.f2)
    product = left * right
    g_text = f"({args.g1}) * (({args.g2}) composed with f1)"
    _print_triangle(product.expand(args.rows), args.format, g_text, product.f, args.order)
    return EXIT_OK


def cmd_inv(args) -> int:
    pair = _pair_from_args(args, args.g, args.f)
    inv = pair.inverse()
    _print_triangle(inv.expand(args.rows), args.format,
                    f"inverse of ({args.g})", inv.f, args.order)
    return EXIT_OK


def cmd_apply(args) -> int:
    pair = _pair_from_args(args, args.g, args.f, warn_stretched=True)
    h = series_from_text(args.h, args.order)
    result = pair.apply(h)
    _print_coeffs(result.coeffs[:min(args.rows, result.order)], args.format, args.order)
    return EXIT_OK


def cmd_az(args) -> int:
    pair = _pair_from_args(args, args.g, args.f)
    report = extract_az(pair, args.terms)
    a = [rational_str(c) for c in report.a_seq]
    z = [rational_str(c) for c in report.z_seq]
    if args.format == "json":
        print(json.dumps({"a_seq": a, "z_seq": z, "terms": report.terms}))
    elif args.format == "csv":
        print(",".join(a))
        print(",".join(z))
    else:
        print("A:", ", ".join(a))
        print("Z:", ", ".join(z))
    return EXIT_OK


def cmd_stochastic(args) -> int:
    g = series_from_text(args.g, args.order)
    pair = stochastic_from_g(g)
    _print_triangle(pair.expand(args.rows), args.format, args.g, pair.f,
                    args.order, row_sums=True)
    return EXIT_OK


def cmd_pseudo_from_g(args) -> int:
    g = series_from_text(args.g, args.order)
    pair = pseudo_from_g(g)
    if args.format == "table":
        print("f coefficients:", ", ".join(rational_str(c) for c in pair.f.coeffs))
    _print_triangle(pair.expand(args.rows), args.format, args.g, pair.f, args.order)
    return EXIT_OK


def cmd_pseudo_check(args) -> int:
    pair = _pair_from_args(args, args.g, args.f)
    failure = pair.pseudo_involution_failure()
    if failure is None:
        print("PASS")
        return EXIT_OK
    print(f"FAIL at order {failure}")
    return EXIT_VERIFY


def cmd_pseudo_family(args) -> int:
    f = series_from_text(args.f, args.order)
    members = family_from_f(f)
    if args.format == "json":
        payload = []
        for kind, pair in zip(FAMILY_KINDS, members):
            entry = _triangle_payload(pair.expand(args.rows), args.f, pair.f, args.order)
            entry["kind"] = kind
            payload.append(entry)
        print(json.dumps({"family": payload, "order": args.order}))
        return EXIT_OK
    for kind, pair in zip(FAMILY_KINDS, members):
        if args.format == "table":
            print(f"-- {kind} --")
        _print_triangle(pair.expand(args.rows), args.format, args.f, pair.f, args.order)
    return EXIT_OK


def cmd_pseudo_power(args) -> int:
    pair = _pair_from_args(args, args.g, args.f)
    powered = power_pseudo(pair, args.n)
    _print_triangle(powered.expand(args.rows), args.format,
                    f"({args.g})^{args.n}", powered.f, args.order)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.fixture == "all":
        targets = all_fixtures()
    else:
        try:
            targets = (fixture_by_id(args.fixture),)
        except KeyError as e:
            print(f"error: {e.args[0]}", file=sys.stderr)
            return EXIT_PARSE
    passed = 0
    for fixture in targets:
        failures = fixture.run(args.order)
        if failures:
            print(f"{fixture.id}: FAIL")
            for message in failures:
                print(f"  {message}")
        else:
            print(f"{fixture.id}: PASS")
            passed += 1
    print(f"{passed}/{len(targets)} fixtures passed")
    return EXIT_OK if passed == len(targets) else EXIT_VERIFY


# ---- argument plumbing ----

def _common_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--order", type=int, default=argparse.SUPPRESS,
                   help="series truncation order (default 32)")
    p.add_argument("--rows", type=int, default=argparse.SUPPRESS,
                   help="rows to display (default 10)")
    p.add_argument("--format", choices=("table", "csv", "json"),
                   default=argparse.SUPPRESS, help="output format (default table)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="riordan",
        description="Exact Riordan-array toolkit: expand, combine, analyze, verify.",
        parents=[common],
    )
    parser.set_defaults(order=32, rows=10, format="table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", parents=[common], help="expand a pair (g, f)")
    p.add_argument("g")
    p.add_argument("f")
    p.set_defaults(handler=cmd_show)

    p = sub.add_parser("mul", parents=[common], help="group product of two pairs")
    p.add_argument("g1")
    p.add_argument("f1")
    p.add_argument("g2")
    p.add_argument("f2")
    p.set_defaults(handler=cmd_mul)

    p = sub.add_parser("inv", parents=[common], help="group inverse of a pair")
    p.add_argument("g")
    p.add_argument("f")
    p.set_defaults(handler=cmd_inv)

    p = sub.add_parser("apply", parents=[common],
                       help="coefficients of g*h(f), the action on a column vector")
    p.add_argument("g")
    p.add_argument("f")
    p.add_argument("h")
    p.set_defaults(handler=cmd_apply)

    p = sub.add_parser("az", parents=[common], help="A and Z sequences of a pair")
    p.add_argument("g")
    p.add_argument("f")
    p.add_argument("--terms", type=int, default=8, help="sequence terms (default 8)")
    p.set_defaults(handler=cmd_az)

    p = sub.add_parser("stochastic", parents=[common],
                       help="stochastic pair built from g, with row sums")
    p.add_argument("g")
    p.set_defaults(handler=cmd_stochastic)

    p = sub.add_parser("pseudo", parents=[common], help="pseudo-involution tools")
    psub = p.add_subparsers(dest="subcommand", required=True)

    q = psub.add_parser("from-g", parents=[common],
                        help="the unique f making (g, f) a pseudo-involution")
    q.add_argument("g")
    q.set_defaults(handler=cmd_pseudo_from_g)

    q = psub.add_parser("check", parents=[common],
                        help="PASS/FAIL pseudo-involution test for (g, f)")
    q.add_argument("g")
    q.add_argument("f")
    q.set_defaults(handler=cmd_pseudo_check)

    q = psub.add_parser("family", parents=[common],
                        help="the four canonical pseudo-involutions sharing f")
    q.add_argument("f")
    q.set_defaults(handler=cmd_pseudo_family)

    q = psub.add_parser("power", parents=[common],
                        help="(g^n, f) from a pseudo-involution (g, f)")
    q.add_argument("g")
    q.add_argument("f")
    q.add_argument("n", type=int)
    q.set_defaults(handler=cmd_pseudo_power)

    p = sub.add_parser("verify", parents=[common],
                       help="recompute bundled fixtures and compare exactly")
    p.add_argument("fixture", nargs="?", default="all",
                   help="fixture id, or 'all' (default)")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ExprSyntaxError, UnknownNameError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except RiordanError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
