"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 step budget exhausted,
4 a verified identity failed.  Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .cf import (
    cf_expand,
    convergents,
    galois_check,
    lpp_cf_agreement_sqrt,
    runs_per_period,
    sqrt_cf,
)
from .errors import StepBudgetExceeded, SurdError
from .lpp import irrationality_certificate, palindrome_checks, trace_lpp
from .notation import parse_rational, parse_surd
from .oracle import oracle_cf
from .render import SCHEMA, build_tree, emit, to_document
from .sweep import rows_to_csv, rows_to_json, run_sweep

EXIT_OK, EXIT_INVALID, EXIT_BUDGET, EXIT_CHECK = 0, 2, 3, 4


class CheckFailed(Exception):
    pass


def _out(data: bytes | str):
    if isinstance(data, str):
        data = data.encode()
    sys.stdout.buffer.write(data)
    sys.stdout.flush()


def _json(doc: dict) -> bytes:
    import json

    return (json.dumps({"schema": SCHEMA, **doc}, sort_keys=True, separators=(",", ":")) + "\n").encode()


def _yes(v) -> str:
    return "n/a" if v is None else ("yes" if v else "no")


def cmd_lpp(args):
    trace = trace_lpp(parse_surd(args.spec), args.max_steps)
    report = palindrome_checks(trace)
    cert = irrationality_certificate(trace)
    if args.format == "json":
        _out(_json({
            "kind": "lpp_report",
            "trace": to_document(trace),
            "palindrome": to_document(report),
            "certificate": to_document(cert),
        }))
    elif args.format == "dot":
        _out(emit(trace, "dot"))
    else:
        m = trace.symmetry_index
        palindrome = report.steps_palindrome if m is not None else report.full_palindrome
        _out(emit(trace, "text"))
        _out(f"T={trace.period} m={'absent' if m is None else m} palindrome={_yes(palindrome)}\n")
        _out(emit(report, "text"))
        _out(emit(cert, "text"))
    if not report.passed:
        raise CheckFailed(f"symmetry checks failed for {args.spec}")


def cmd_cf(args):
    x = parse_surd(args.spec)
    exp = cf_expand(x, args.max_terms)
    n = args.terms if args.terms is not None else len(exp.terms)
    oracle_ok = None
    if args.oracle_check:
        oracle_ok = exp.take(n) == oracle_cf(x, n)
    if args.format == "json":
        _out(_json({"kind": "cf_report", "expansion": to_document(exp), "oracle_check": oracle_ok}))
    else:
        _out(emit(exp, "text"))
        _out(f"least period {exp.period[: exp.least_period_len]}\n")
        _out(f"first {n} terms: {exp.take(n)}\n")
        convs = convergents(exp, min(n, 8))
        _out("convergents: " + ", ".join(map(str, convs)) + "\n")
        if oracle_ok is not None:
            _out(f"oracle check ({n} terms): {'PASS' if oracle_ok else 'FAIL'}\n")
    if oracle_ok is False:
        raise CheckFailed(f"exact and oracle expansions of {args.spec} disagree")


def cmd_sqrt_cf(args):
    R = parse_rational(args.R)
    exp, report = sqrt_cf(R.numerator, R.denominator, args.max_terms)
    horizon = 2 * runs_per_period(trace_lpp(report.alpha))
    agree = lpp_cf_agreement_sqrt(report.alpha, horizon)
    if args.format == "json":
        doc = to_document(report)
        doc["lpp_agreement"] = agree
        _out(_json(doc))
    else:
        _out(emit(report, "text"))
        if args.terms:
            _out(f"first {args.terms} terms: {exp.take(args.terms)}\n")
        _out(f"a_n = t_n on the LPP ({horizon} terms): {'PASS' if agree else 'FAIL'}\n")
    if not (report.passed and agree):
        raise CheckFailed(f"Legendre shape check failed for sqrt({args.R})")


def cmd_galois(args):
    report = galois_check(parse_surd(args.spec), args.horizon)
    _out(emit(report, "json" if args.format == "json" else "text"))
    if not report.passed:
        raise CheckFailed(f"Galois checks failed for {args.spec}")


def cmd_tree(args):
    try:
        root = parse_surd(args.spec)
    except ValueError:
        root = parse_rational(args.spec)
    tree = build_tree(root, args.depth, cap=args.depth_cap)
    _out(emit(tree, args.format, annotate=args.annotate))


def cmd_sweep(args):
    rows = run_sweep(args.n_max, args.jobs)
    fmt = args.format
    if fmt is None:
        fmt = "json" if args.out and args.out.suffix == ".json" else "csv"
    data = rows_to_json(rows) if fmt == "json" else rows_to_csv(rows)
    if args.out:
        args.out.write_text(data)
    else:
        _out(data)
    failed = [r for r in rows if not r.checks_passed]
    print(f"{len(rows)} inputs, {len(failed)} failing", file=sys.stderr)
    if failed:
        r = failed[0]
        raise CheckFailed(f"N={r.N} p={r.p} q={r.q} failed {r.failed}; reproduce: surdpath lpp '{r.spec}'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="surdpath", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lpp", help="left-positive path, symmetry report and certificate")
    p.add_argument("spec", help="surd such as 'sqrt(5)' or '(sqrt(19)+4)/3'")
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.set_defaults(func=cmd_lpp)

    p = sub.add_parser("cf", help="exact continued fraction")
    p.add_argument("spec")
    p.add_argument("--terms", type=int, default=None, help="number of terms to print / check")
    p.add_argument("--max-terms", type=int, default=None, help="budget for period detection")
    p.add_argument("--oracle-check", action="store_true", help="recompute terms by interval oracle")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("sqrt-cf", help="continued fraction of sqrt(f/g) with shape check")
    p.add_argument("R", help="rational 'f/g' or integer 'f'")
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--max-terms", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_sqrt_cf)

    p = sub.add_parser("galois", help="verify a reduced surd's purely periodic expansion")
    p.add_argument("spec")
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_galois)

    p = sub.add_parser("tree", help="bounded-depth Calkin-Wilf tree")
    p.add_argument("spec", help="surd, or a positive rational for the classic tree")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--depth-cap", type=int, default=12)
    p.add_argument("--annotate", action="store_true", help="add decimal values to JSON labels")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("sweep", help="verify every valid (N, p, q) with N <= n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "n_max", 2) < 2:
        print("error: --n-max must be at least 2", file=sys.stderr)
        return EXIT_INVALID
    try:
        args.func(args)
    except StepBudgetExceeded as exc:
        print(f"error: StepBudgetExceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except (SurdError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
