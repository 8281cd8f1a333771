"""Exact quadratic surds ``(eps*sqrt(N) + c) / d`` and their tree moves.

Every label in the Calkin-Wilf tree rooted at ``(sqrt(N) + p) / q`` has this
shape with ``d | N - c**2``; the representation is unique, so equality is
plain componentwise equality on ``(N, eps, c, d)``.  Everything here is
integer arithmetic; nothing is ever evaluated in floating point except
``float(x)`` for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .errors import (
    DivisibilityViolation,
    NonPositiveDenominator,
    NonPositiveValue,
    PreconditionViolated,
    RadicandMismatch,
    SquareRadicand,
)


def isqrt(n: int) -> int:
    """Exact floor of the square root of a non-negative integer."""
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def sqrt_sign(a: int, b: int, N: int) -> int:
    """Sign of ``a*sqrt(N) + b`` for integers a, b and non-square N.

    Never zero unless ``a == b == 0``.
    """
    if a == 0:
        return (b > 0) - (b < 0)
    sa = 1 if a > 0 else -1
    if b == 0 or (b > 0) == (a > 0):
        return sa
    # opposite signs; a*a*N == b*b is impossible for non-square N
    return sa if a * a * N > b * b else -sa


def _trusted(N: int, eps: int, c: int, d: int) -> "QuadraticSurd":
    # Skips validation; only for results the tree formulas guarantee valid.
    x = object.__new__(QuadraticSurd)
    object.__setattr__(x, "N", N)
    object.__setattr__(x, "eps", eps)
    object.__setattr__(x, "c", c)
    object.__setattr__(x, "d", d)
    return x


@total_ordering
@dataclass(frozen=True, slots=True)
class QuadraticSurd:
    """The positive real ``(eps*sqrt(N) + c) / d``.

    Invariants, checked on construction: N >= 2 is not a perfect square,
    eps is +1 or -1, d >= 1, d divides N - c**2, and the value is > 0.
    """

    N: int
    eps: int
    c: int
    d: int

    def __post_init__(self):
        N, eps, c, d = self.N, self.eps, self.c, self.d
        if eps not in (1, -1):
            raise ValueError(f"eps must be +1 or -1, got {eps!r}")
        if d <= 0:
            raise NonPositiveDenominator(f"d must be positive, got {d}")
        if N <= 1 or is_perfect_square(N):
            raise SquareRadicand(f"N must be a non-square integer >= 2, got {N}")
        if (N - c * c) % d:
            raise DivisibilityViolation(
                f"q must divide N-p^2: {d} does not divide {N - c * c}"
            )
        if sqrt_sign(eps, c, N) <= 0:
            raise NonPositiveValue(
                f"value ({'-' if eps < 0 else ''}sqrt({N})+{c})/{d} is not positive"
            )

    def __lt__(self, other):
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        if other.N != self.N:
            raise RadicandMismatch(f"cannot order surds over sqrt({self.N}) and sqrt({other.N})")
        # x < y  <=>  (e1*d2 - e2*d1)*sqrt(N) + (c1*d2 - c2*d1) < 0
        a = self.eps * other.d - other.eps * self.d
        b = self.c * other.d - other.c * self.d
        return sqrt_sign(a, b, self.N) < 0

    def __float__(self):
        return (self.eps * math.sqrt(self.N) + self.c) / self.d

    def __str__(self):
        return format_surd(self)

    @property
    def parts(self) -> tuple[Fraction, Fraction]:
        """``(s, r)`` with value ``s*sqrt(N) + r``."""
        return Fraction(self.eps, self.d), Fraction(self.c, self.d)


@dataclass(frozen=True, slots=True)
class SignedSurd:
    """A real number ``sign * magnitude`` with a positive surd magnitude.

    Used for conjugates, which may be negative.
    """

    sign: int
    magnitude: QuadraticSurd

    @property
    def N(self):
        return self.magnitude.N

    @property
    def parts(self) -> tuple[Fraction, Fraction]:
        s, r = self.magnitude.parts
        return self.sign * s, self.sign * r

    def __float__(self):
        return self.sign * float(self.magnitude)

    def __str__(self):
        return ("-" if self.sign < 0 else "") + format_surd(self.magnitude)


def make_surd(N: int, eps: int, c: int, d: int) -> QuadraticSurd:
    return QuadraticSurd(N, eps, c, d)


def format_surd(x: QuadraticSurd) -> str:
    """Canonical text form, e.g. ``sqrt(5)``, ``(sqrt(19)-4)/3``, ``(-sqrt(2)+2)/1``."""
    root = f"sqrt({x.N})" if x.eps > 0 else f"-sqrt({x.N})"
    if x.c == 0:
        return root if x.d == 1 else f"{root}/{x.d}"
    sign = "+" if x.c > 0 else "-"
    return f"({root}{sign}{abs(x.c)})/{x.d}"


def right_child(x: QuadraticSurd) -> QuadraticSurd:
    """``x + 1``."""
    return _trusted(x.N, x.eps, x.c + x.d, x.d)


def left_child(x: QuadraticSurd) -> QuadraticSurd:
    """``x / (x + 1)``, renormalised so the denominator stays positive."""
    N, eps, c, d = x.N, x.eps, x.c, x.d
    r = (N - c * c) // d
    s = c + d
    if N - s * s > 0:
        return _trusted(N, -eps, r - c, r - 2 * c - d)
    return _trusted(N, eps, c - r, 2 * c + d - r)


def right_parent(x: QuadraticSurd) -> QuadraticSurd:
    """The y with ``right_child(y) == x``; needs eps=+1 and (c-d)^2 < N."""
    if x.eps != 1:
        raise PreconditionViolated("right_parent needs eps=+1")
    if (x.c - x.d) ** 2 > x.N:
        raise PreconditionViolated(f"right_parent needs (c-d)^2 < N for {x}")
    return _trusted(x.N, 1, x.c - x.d, x.d)


def left_parent(x: QuadraticSurd) -> QuadraticSurd:
    """The y with ``left_child(y) == x``; needs eps=+1 and (c-d)^2 > N."""
    N, c, d = x.N, x.c, x.d
    if x.eps != 1:
        raise PreconditionViolated("left_parent needs eps=+1")
    gap = (c - d) ** 2 - N
    if gap < 0:
        raise PreconditionViolated(f"left_parent needs (c-d)^2 > N for {x}")
    return _trusted(N, 1, c + (N - c * c) // d, gap // d)


def conjugate(x: QuadraticSurd | SignedSurd) -> SignedSurd:
    """Algebraic conjugate (sqrt(N) -> -sqrt(N)) as a sign plus positive magnitude."""
    if isinstance(x, SignedSurd):
        inner = conjugate(x.magnitude)
        return SignedSurd(x.sign * inner.sign, inner.magnitude)
    N, eps, c, d = x.N, x.eps, x.c, x.d
    if sqrt_sign(-eps, c, N) > 0:
        return SignedSurd(1, _trusted(N, -eps, c, d))
    return SignedSurd(-1, _trusted(N, eps, -c, d))


def neg_conjugate(x: QuadraticSurd) -> QuadraticSurd:
    """``-x*`` as a surd; raises NonPositiveValue when it is not positive."""
    conj = conjugate(x)
    if conj.sign > 0:
        raise NonPositiveValue(f"-({x})* is negative")
    return conj.magnitude


def reciprocal(x: QuadraticSurd) -> QuadraticSurd:
    """``1/x`` via ``d / (eps*sqrt(N) + c) = (eps*sqrt(N) - c) / ((N - c^2)/d)``."""
    N, eps, c, d = x.N, x.eps, x.c, x.d
    den = (N - c * c) // d
    if den > 0:
        return _trusted(N, eps, -c, den)
    return _trusted(N, -eps, c, -den)


def shift(x: QuadraticSurd, k: int) -> QuadraticSurd:
    """``x + k`` for an integer k; the result must stay positive."""
    y = _trusted(x.N, x.eps, x.c + k * x.d, x.d)
    if sqrt_sign(y.eps, y.c, y.N) <= 0:
        raise NonPositiveValue(f"{x} + {k} is not positive")
    return y


def floor_surd(x: QuadraticSurd) -> int:
    # sqrt(N) lies strictly inside (s, s+1), so neither branch sits on a boundary.
    s = math.isqrt(x.N)
    if x.eps > 0:
        return (s + x.c) // x.d
    return (x.c - s - 1) // x.d


def same_value(x: QuadraticSurd, y: QuadraticSurd) -> bool:
    """Exact equality of values, also across different radicands."""
    if x.N == y.N:
        return x == y
    # e1*sqrt(N1)/d1 - e2*sqrt(N2)/d2 == c2/d2 - c1/d1 needs both sides zero
    # unless N1/N2 is a rational square; compare after clearing denominators.
    a1, a2 = x.eps * y.d, y.eps * x.d
    lhs_sq1, lhs_sq2 = a1 * a1 * x.N, a2 * a2 * y.N
    if lhs_sq1 != lhs_sq2 or (a1 > 0) != (a2 > 0):
        return False
    return x.c * y.d == y.c * x.d


def normalize(x: QuadraticSurd) -> QuadraticSurd:
    """Pull square factors out of N where they cancel with c and d.

    ``(sqrt(76)+8)/6`` becomes ``(sqrt(19)+4)/3``.
    """
    N, eps, c, d = x.N, x.eps, x.c, x.d
    k = 1
    for f in range(math.isqrt(N), 1, -1):
        if N % (f * f) == 0:
            k = f
            break
    g = math.gcd(k, c, d)
    for h in sorted((h for h in range(1, g + 1) if g % h == 0), reverse=True):
        n2 = N // (h * h)
        c2, d2 = c // h, d // h
        if (n2 - c2 * c2) % d2 == 0:
            return _trusted(n2, eps, c2, d2)
    return x
