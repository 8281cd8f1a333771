"""Mass verification over every valid root ``(sqrt(N)+p)/q`` with N <= n_max."""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cf import (
    cf_expand,
    check_convergent_identity,
    check_run_identities,
    galois_check,
    is_reduced_surd,
    lpp_cf_agreement_sqrt,
    runs_per_period,
)
from .core import QuadraticSurd, is_perfect_square
from .errors import SurdError
from .lpp import R, check_unique_parentage, irrationality_certificate, palindrome_checks, trace_lpp

CSV_COLUMNS = (
    "N", "p", "q", "T", "m", "has_symmetry", "palindrome_s",
    "palindrome_cf", "cf_period_len", "checks_passed",
)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    for k in range(1, math.isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
    return small + large[::-1]


def valid_triples(n_max: int):
    """All (N, p, q): 2 <= N <= n_max non-square, p^2 < N, q | N - p^2; sorted."""
    for N in range(2, n_max + 1):
        if is_perfect_square(N):
            continue
        s = math.isqrt(N)
        for p in range(-s, s + 1):
            for q in _divisors(N - p * p):
                yield N, p, q


@dataclass
class SweepRow:
    N: int
    p: int
    q: int
    T: int | None = None
    m: int | None = None
    palindrome_s: bool | None = None
    palindrome_cf: bool | None = None
    cf_period_len: int | None = None
    failed: list[str] = field(default_factory=list)

    @property
    def has_symmetry(self) -> bool:
        return self.m is not None

    @property
    def checks_passed(self) -> bool:
        return not self.failed

    @property
    def spec(self) -> str:
        return str(QuadraticSurd(self.N, 1, self.p, self.q))

    def as_dict(self) -> dict:
        return {
            "N": self.N, "p": self.p, "q": self.q, "T": self.T, "m": self.m,
            "has_symmetry": self.has_symmetry, "palindrome_s": self.palindrome_s,
            "palindrome_cf": self.palindrome_cf, "cf_period_len": self.cf_period_len,
            "checks_passed": self.checks_passed, "failed": self.failed,
        }


def check_root(N: int, p: int, q: int) -> SweepRow:
    """Trace one root and run every property check on it."""
    row = SweepRow(N, p, q)
    checks: dict[str, bool] = {}
    try:
        alpha = QuadraticSurd(N, 1, p, q)
        trace = trace_lpp(alpha)  # raises on an interior repeat
        T = row.T = trace.period
        row.m = trace.symmetry_index
        checks["period_at_least_2"] = T >= 2
        checks["bounds"] = all(
            c * c < N and 0 < d <= N - c * c for c, d in zip(trace.c_seq, trace.d_seq)
        )
        checks["unique_parentage"] = check_unique_parentage(trace)
        cert = irrationality_certificate(trace)
        checks["certificate"] = (cert.index_a, cert.index_b) == (0, T)
        report = palindrome_checks(trace)
        checks["palindrome_report"] = report.passed
        row.palindrome_s = report.steps_palindrome
        for name, ok in check_run_identities(trace, 2 * runs_per_period(trace)).items():
            checks["runs_" + name] = ok
        exp = cf_expand(alpha)
        row.cf_period_len = exp.least_period_len
        checks["convergent_identity"] = check_convergent_identity(exp, len(exp.terms) + exp.period_len)
        if p == 0 and N > q * q:
            checks["first_step_right"] = trace.steps[0] is R
            checks["m_equals_T"] = row.m == T
            checks["full_palindrome"] = report.full_palindrome is True
            per = exp.period
            row.palindrome_cf = (
                exp.period_start == 1 and per[:-1] == per[-2::-1] and per[-1] == 2 * exp.terms[0]
            )
            checks["legendre_shape"] = row.palindrome_cf
            checks["sqrt_agreement"] = lpp_cf_agreement_sqrt(alpha, 2 * runs_per_period(trace))
        if is_reduced_surd(alpha):
            checks["galois"] = galois_check(alpha).passed
    except SurdError as exc:
        checks[type(exc).__name__] = False
    row.failed = sorted(name for name, ok in checks.items() if not ok)
    return row


def _check_triple(t):
    return check_root(*t)


def run_sweep(n_max: int, jobs: int = 1) -> list[SweepRow]:
    """Rows in enumeration order, whatever the worker count."""
    triples = list(valid_triples(n_max))
    if jobs <= 1:
        return [check_root(*t) for t in triples]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_check_triple, triples, chunksize=256))


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def rows_to_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        d = row.as_dict()
        writer.writerow([_csv_cell(d[col]) for col in CSV_COLUMNS])
    return buf.getvalue()


def rows_to_json(rows: list[SweepRow]) -> str:
    doc = {"schema": "surdpath-v1", "kind": "sweep", "rows": [r.as_dict() for r in rows]}
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
