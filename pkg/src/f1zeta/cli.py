"""The ``f1`` command line tool."""

from __future__ import annotations

import argparse
import sys
from math import gcd

from .dsl import load
from .errors import DSLSyntaxError, ResourceError, SemanticError
from .oracle import scheme_oracle_count
from .report import (
    k_report,
    render_counts,
    render_k,
    render_scheme,
    render_spec,
    scheme_report,
    spec_report,
    to_json,
)
from .scheme import scheme_exponent
from .zeta import exact_count, prime_powers, zeta_polynomial

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SEMANTIC = 3
EXIT_VERIFY = 4
EXIT_RESOURCE = 5


def _workspace(path: str):
    with open(path, encoding="utf-8") as fh:
        return load(fh.read())


def _oracle_bounds(ws) -> dict:
    return {"max_gens": ws.options["oracle_generators"], "max_space": ws.options["oracle_space"]}


def _q_list(text: str) -> list[int]:
    try:
        qs = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}") from None
    if not qs or min(qs) < 2:
        raise argparse.ArgumentTypeError("q values must be integers >= 2")
    return qs


def cmd_zeta(args, out) -> int:
    ws = _workspace(args.file)
    report = scheme_report(ws.scheme(args.scheme))
    out.write(to_json(report) if args.json else render_scheme(report))
    return EXIT_OK


def cmd_count(args, out) -> int:
    ws = _workspace(args.file)
    report = scheme_report(ws.scheme(args.scheme), args.q, oracle=True, **_oracle_bounds(ws))
    out.write(to_json(report["counts"]) if args.json else render_counts(report["counts"]))
    return EXIT_OK


def cmd_spec(args, out) -> int:
    ws = _workspace(args.file)
    report = spec_report(args.monoid, ws.monoid(args.monoid).chart)
    out.write(to_json(report) if args.json else render_spec(report))
    return EXIT_OK


def cmd_k(args, out) -> int:
    ws = _workspace(args.file)
    cap = args.k0_cap if args.k0_cap is not None else ws.options["k0_cap"]
    report = k_report(args.monoid, ws.monoid(args.monoid).chart, cap)
    out.write(to_json(report) if args.json else render_k(report))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    """Oracle against formula at every prime power, and N(q) on the coprime ones."""
    ws = _workspace(args.file)
    x = ws.scheme(args.scheme)
    N = zeta_polynomial(x)
    e = scheme_exponent(x)
    bounds = _oracle_bounds(ws)
    out.write(f"scheme {x.name}: N(x) = {N}, e = {e}\n")
    failures = 0
    for q in prime_powers(args.qmax):
        count = exact_count(x, q)
        oracle = scheme_oracle_count(x, q, **bounds)
        coprime = gcd(q - 1, e) == 1
        ok = oracle == count and (not coprime or N(q) == count)
        note = "" if coprime else "  (excluded by coprimality)"
        out.write(
            f"q={q:<4} count={count:<10} oracle={oracle:<10} N(q)={N(q):<10} "
            f"{'ok' if ok else 'FAIL'}{note}\n"
        )
        failures += not ok
    out.write(f"{'all checks passed' if not failures else f'{failures} failure(s)'}\n")
    return EXIT_OK if not failures else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="f1", description="Point counts, zeta functions and K-theory of monoid schemes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeta", help="zeta polynomial and point table of a scheme")
    p.add_argument("file")
    p.add_argument("--scheme", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_zeta)

    p = sub.add_parser("count", help="exact and brute-force point counts")
    p.add_argument("file")
    p.add_argument("--scheme", required=True)
    p.add_argument("--q", required=True, type=_q_list, help="comma-separated values, e.g. 2,3,4")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_count)

    p = sub.add_parser("spec", help="prime ideals and stalk unit groups of a monoid")
    p.add_argument("file")
    p.add_argument("--monoid", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_spec)

    p = sub.add_parser("k", help="GL orders, K+ table and K0 of a monoid")
    p.add_argument("file")
    p.add_argument("--monoid", required=True)
    p.add_argument("--k0-cap", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_k)

    p = sub.add_parser("verify", help="check counts against the oracle for all prime powers up to qmax")
    p.add_argument("file")
    p.add_argument("--scheme", required=True)
    p.add_argument("--qmax", required=True, type=int)
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.run(args, out)
    except DSLSyntaxError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"f1: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SemanticError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except ResourceError as exc:
        print(f"f1: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
