"""Continued fractions of quadratic surds and their link to the LPP.

The LPP compresses into direction runs ``(y_n, t_n)``: ``y_n`` is the node
where the path turns and ``t_n`` the number of steps until the next turn.
For ``sqrt(N)/q`` (with N > q^2) the run lengths are the partial quotients of
the continued fraction; for a reduced surd x they are the partial quotients of
x read off the LPP of ``-1/x*``.  The verifiers here check those identities
exactly on concrete inputs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from . import _kernel
from .core import (
    QuadraticSurd,
    _trusted,
    floor_surd,
    is_perfect_square,
    neg_conjugate,
    reciprocal,
    shift,
    sqrt_sign,
)
from .errors import (
    NonPositiveValue,
    NotGreaterThanOne,
    NotReduced,
    PreconditionViolated,
    RationalSquare,
    SquareRadicand,
    StepBudgetExceeded,
)
from .lpp import L, LppTrace, trace_lpp


class Orientation(enum.Enum):
    START = "start"
    LR = "LR"
    RL = "RL"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class DirectionRun:
    """A maximal block of equal steps starting at node ``y`` (path index ``index``)."""

    y: QuadraticSurd
    orientation: Orientation
    t: int
    index: int


def direction_runs(trace: LppTrace, n_runs: int) -> list[DirectionRun]:
    """The first ``n_runs`` runs of the LPP, reading the period cyclically."""
    runs = []
    j = 0
    orientation = Orientation.START
    while len(runs) < n_runs:
        s = trace.step(j)
        t = 1
        while trace.step(j + t) is s:
            t += 1
        runs.append(DirectionRun(trace.node(j), orientation, t, j))
        orientation = Orientation.LR if s is L else Orientation.RL
        j += t
    return runs


def check_run_identities(trace: LppTrace, n_runs: int) -> dict[str, bool]:
    """Exact checks of the run relations, the run-boundary bounds and the t_n floors.

    * relations: ``y_{n+1} = y_n + t_n`` into an RL node, ``1/y_{n+1} = 1/y_n + t_n``
      into an LR node;
    * bounds: RL nodes have ``0 < -y* < 1 < y``, LR nodes ``0 < y < 1 < -y*``;
    * floors: ``t_n`` is the floor of ``-y_n*`` (next RL) or of ``-1/y_n*`` (next LR).
    """
    runs = direction_runs(trace, n_runs + 1)
    relations = bounds = floors = True
    for cur, nxt in zip(runs, runs[1:]):
        if nxt.orientation is Orientation.RL:
            relations &= nxt.y == shift(cur.y, cur.t)
        else:
            relations &= reciprocal(nxt.y) == shift(reciprocal(cur.y), cur.t)
        z = _minus_conj(cur.y, invert=nxt.orientation is Orientation.LR)
        floors &= z is not None and floor_surd(z) == cur.t
    for run in runs[1:]:
        z = _minus_conj(run.y, invert=False)
        if z is None:
            bounds = False
            continue
        y_big = sqrt_sign(run.y.eps, run.y.c - run.y.d, run.y.N) > 0
        z_big = sqrt_sign(z.eps, z.c - z.d, z.N) > 0
        bounds &= (y_big and not z_big) if run.orientation is Orientation.RL else (z_big and not y_big)
    return {"relations": relations, "bounds": bounds, "floors": floors}


def runs_per_period(trace: LppTrace) -> int:
    """Number of direction changes in one cyclic period of steps."""
    steps = trace.steps
    T = len(steps)
    return sum(steps[n] is not steps[(n + 1) % T] for n in range(T))


@dataclass(frozen=True)
class CfExpansion:
    """Partial quotients ``a_0..a_k`` with the complete quotients that produced them.

    When periodic, ``terms[period_start:]`` is exactly one period and the
    expansion continues by repeating it.
    """

    x: QuadraticSurd
    terms: list[int]
    quotients: list[QuadraticSurd]
    period_start: int | None = None
    period_len: int | None = None

    @property
    def periodic(self) -> bool:
        return self.period_start is not None

    @property
    def purely_periodic(self) -> bool:
        return self.period_start == 0

    @property
    def preperiod(self) -> list[int]:
        return self.terms[: self.period_start]

    @property
    def period(self) -> list[int]:
        return self.terms[self.period_start :]

    @property
    def least_period_len(self) -> int:
        per = self.period
        P = len(per)
        for k in range(1, P + 1):
            if P % k == 0 and per[k:] + per[:k] == per:
                return k
        return P

    def _index(self, n: int) -> int:
        if n < len(self.terms):
            return n
        if not self.periodic:
            raise IndexError(f"term {n} beyond a non-periodic expansion of length {len(self.terms)}")
        return self.period_start + (n - self.period_start) % self.period_len

    def term(self, n: int) -> int:
        return self.terms[self._index(n)]

    def quotient(self, n: int) -> QuadraticSurd:
        return self.quotients[self._index(n)]

    def take(self, n: int) -> list[int]:
        return [self.term(i) for i in range(n)]


def default_cf_budget(N: int) -> int:
    return 4 * N + 64


def cf_expand(x: QuadraticSurd, n_terms: int | None = None) -> CfExpansion:
    """Exact regular continued fraction of ``x`` up to the first repeated complete quotient.

    ``n_terms`` bounds the number of partial quotients computed.
    """
    N = x.N
    if n_terms is None:
        n_terms = default_cf_budget(N)
    terms, epss, cs, ds, start = _kernel.cf_walk(N, math.isqrt(N), x.eps, x.c, x.d, n_terms)
    if start < 0:
        raise StepBudgetExceeded(f"no repeated complete quotient for {x} within {n_terms} terms", steps=n_terms)
    quotients = [_trusted(N, e, c, d) for e, c, d in zip(epss, cs, ds)]
    return CfExpansion(x, terms, quotients, start, len(terms) - start)


@dataclass(frozen=True)
class ConvergentPair:
    p: int
    q: int

    def __str__(self):
        return f"{self.p}/{self.q}"

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


def convergents(expansion: CfExpansion, n: int) -> list[ConvergentPair]:
    """``p_k/q_k`` for k < n from the standard recurrence."""
    p2, p1 = 0, 1
    q2, q1 = 1, 0
    out = []
    for k in range(n):
        a = expansion.term(k)
        p2, p1 = p1, a * p1 + p2
        q2, q1 = q1, a * q1 + q2
        out.append(ConvergentPair(p1, q1))
    return out


def _qmul(u, v, N):
    # (s1*sqrt(N) + r1) * (s2*sqrt(N) + r2) as a (sqrt coefficient, rational) pair
    s1, r1 = u
    s2, r2 = v
    return s1 * r2 + r1 * s2, s1 * s2 * N + r1 * r2


def check_convergent_identity(expansion: CfExpansion, n: int) -> bool:
    """``zeta_k * (q_{k-1} x - p_{k-1}) == -(q_{k-2} x - p_{k-2})`` for k < n."""
    x = expansion.x
    N = x.N
    s, r = x.parts
    p2, p1 = 0, 1
    q2, q1 = 1, 0
    for k in range(n):
        zeta = expansion.quotient(k).parts
        lhs = _qmul(zeta, (q1 * s, q1 * r - p1), N)
        rhs = (-q2 * s, -(q2 * r - p2))
        if lhs != rhs:
            return False
        a = expansion.term(k)
        p2, p1 = p1, a * p1 + p2
        q2, q1 = q1, a * q1 + q2
    return True


def approximation_bound_holds(x: QuadraticSurd, conv: ConvergentPair) -> bool:
    """``|x - p/q| < 1/q^2``, decided exactly."""
    N, eps, c, d = x.N, x.eps, x.c, x.d
    p, q = conv.p, conv.q
    a = eps * q * q
    b = c * q * q - p * q * d
    return sqrt_sign(a, b - d, N) < 0 and sqrt_sign(a, b + d, N) > 0


@dataclass(frozen=True)
class LegendreReport:
    """Shape of the expansion of sqrt(R): ``[a_0; a_1, ..., a_1, 2*a_0]`` repeating."""

    R: Fraction
    alpha: QuadraticSurd
    a0: int
    period: list[int]
    preperiod_is_a0: bool
    interior_palindrome: bool
    terminal_twice_a0: bool

    @property
    def passed(self) -> bool:
        return self.preperiod_is_a0 and self.interior_palindrome and self.terminal_twice_a0


def sqrt_cf(R_num: int, R_den: int = 1, n_terms: int | None = None) -> tuple[CfExpansion, LegendreReport]:
    """Continued fraction of sqrt(R_num/R_den), built from ``sqrt(f*g)/g``."""
    if R_den <= 0 or R_num <= 0:
        raise NotGreaterThanOne(f"R must be a positive rational, got {R_num}/{R_den}")
    g0 = math.gcd(R_num, R_den)
    f, g = R_num // g0, R_den // g0
    if f <= g:
        raise NotGreaterThanOne(f"R must exceed 1, got {f}/{g}")
    if is_perfect_square(f) and is_perfect_square(g):
        raise RationalSquare(f"R = {f}/{g} is the square of a rational")
    alpha = QuadraticSurd(f * g, 1, 0, g)
    exp = cf_expand(alpha, n_terms)
    per = exp.period
    report = LegendreReport(
        R=Fraction(f, g),
        alpha=alpha,
        a0=exp.terms[0],
        period=per,
        preperiod_is_a0=exp.period_start == 1,
        interior_palindrome=per[:-1] == per[-2::-1],
        terminal_twice_a0=per[-1] == 2 * exp.terms[0],
    )
    return exp, report


def _minus_conj(y: QuadraticSurd, invert: bool) -> QuadraticSurd | None:
    try:
        z = neg_conjugate(y)
    except NonPositiveValue:
        return None
    return reciprocal(z) if invert else z


def _run_agreement(exp: CfExpansion, runs: list[DirectionRun], invert_even: bool) -> tuple[bool, bool]:
    # returns (a_n == t_n for all n, parity chain of complete quotients holds)
    terms_ok = all(exp.term(n) == run.t for n, run in enumerate(runs))
    chain_ok = all(
        exp.quotient(n) == _minus_conj(run.y, invert=(n % 2 == 0) == invert_even)
        for n, run in enumerate(runs)
    )
    return terms_ok, chain_ok


def lpp_cf_agreement_sqrt(alpha: QuadraticSurd, horizon: int) -> bool:
    """For ``alpha = sqrt(N)/q`` with N > q^2: a_n == t_n and zeta_n is -y_n* (even n) or -1/y_n* (odd n)."""
    if alpha.eps != 1 or alpha.c != 0 or alpha.N <= alpha.d * alpha.d:
        raise PreconditionViolated(f"need sqrt(N)/q with N > q^2, got {alpha}")
    runs = direction_runs(trace_lpp(alpha), horizon)
    terms_ok, chain_ok = _run_agreement(cf_expand(alpha), runs, invert_even=False)
    return terms_ok and chain_ok


def is_reduced_surd(x: QuadraticSurd) -> bool:
    """``x > 1`` and ``-1 < x* < 0``."""
    N, eps, c, d = x.N, x.eps, x.c, x.d
    return (
        sqrt_sign(eps, c - d, N) > 0
        and sqrt_sign(-eps, c, N) < 0
        and sqrt_sign(-eps, c + d, N) > 0
    )


@dataclass(frozen=True)
class QuadraticPoly:
    """``a X^2 + b X + c`` with a > 0, c < 0 and a non-square discriminant."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0:
            raise ValueError(f"leading coefficient must be positive, got {self.a}")
        if self.c >= 0:
            raise ValueError(f"constant term must be negative, got {self.c}")
        if is_perfect_square(self.discriminant):
            raise SquareRadicand(f"discriminant {self.discriminant} is a perfect square")

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c


def reduced_from_poly(P: QuadraticPoly) -> QuadraticSurd:
    """The positive root ``(sqrt(D) - b) / 2a``, checked to be a reduced surd."""
    N, p, q = P.discriminant, -P.b, 2 * P.a
    ok = p > 0 and p * p < N and (N - p * p) % q == 0 and (p - q) ** 2 < N < (p + q) ** 2
    if not ok:
        raise NotReduced(f"positive root of {P.a}X^2{P.b:+d}X{P.c:+d} is not a reduced surd")
    return QuadraticSurd(N, 1, p, q)


@dataclass(frozen=True)
class GaloisReport:
    x: QuadraticSurd
    alpha: QuadraticSurd  # -1/x*
    period: list[int]
    alpha_period: list[int]
    lpp_m: int  # runs per LPP period of alpha
    lpp_t: list[int]  # t_0..t_{m-1} of the LPP of alpha
    x_lpp_m: int
    x_lpp_t: list[int]  # t'_0..t'_{m'-1} of the LPP of x itself
    horizon: int
    purely_periodic: bool
    reversal: bool
    a_equals_t: bool
    parity_chain: bool
    reverse_reading: bool
    m_even: bool

    @property
    def least_period_len(self) -> int:
        return len(self.period)

    @property
    def passed(self) -> bool:
        return all(
            (self.purely_periodic, self.reversal, self.a_equals_t,
             self.parity_chain, self.reverse_reading, self.m_even)
        )


def galois_check(x: QuadraticSurd, horizon: int | None = None) -> GaloisReport:
    """Verify the purely periodic, reversible expansion of a reduced surd.

    ``horizon`` is how many partial quotients are compared with LPP run
    lengths; it defaults to two LPP periods.
    """
    if not is_reduced_surd(x):
        raise NotReduced(f"{x} is not a reduced quadratic surd")
    cf_x = cf_expand(x)
    alpha = reciprocal(neg_conjugate(x))
    cf_alpha = cf_expand(alpha)
    tr_alpha = trace_lpp(alpha)
    m = runs_per_period(tr_alpha)
    if horizon is None:
        horizon = 2 * m
    runs_alpha = direction_runs(tr_alpha, max(horizon, m))
    terms_ok, chain_ok = _run_agreement(cf_x, runs_alpha[:horizon], invert_even=True)
    tr_x = trace_lpp(x)
    m_x = runs_per_period(tr_x)
    t_x = [run.t for run in direction_runs(tr_x, m_x)]
    return GaloisReport(
        x=x,
        alpha=alpha,
        period=cf_x.period,
        alpha_period=cf_alpha.period,
        lpp_m=m,
        lpp_t=[run.t for run in runs_alpha[:m]],
        x_lpp_m=m_x,
        x_lpp_t=t_x,
        horizon=horizon,
        purely_periodic=cf_x.purely_periodic,
        reversal=cf_alpha.purely_periodic and cf_alpha.period == cf_x.period[::-1],
        a_equals_t=terms_ok,
        parity_chain=chain_ok,
        reverse_reading=cf_x.take(m_x) == t_x[::-1],
        m_even=m % 2 == 0,
    )
