"""Independent checking path built on decimal enclosures of sqrt(N).

Nothing here touches the exact kernel: values are enclosed in rational
intervals ``lo < x < hi`` from a k-digit integer square root, floors and
continued-fraction terms are read off both endpoints, and whenever the two
endpoints disagree the precision is doubled.  Only ``math.isqrt`` is shared
with the main code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

START_DIGITS = 20
FLOOR_DIGIT_CAP = 256


class OracleCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class IntervalApprox:
    """Open interval (lo, hi) known to contain sqrt(N)."""

    N: int
    digits: int
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def sqrt_interval(N: int, k: int) -> IntervalApprox:
    scale = 10**k
    root = math.isqrt(N * scale * scale)
    return IntervalApprox(N, k, Fraction(root, scale), Fraction(root + 1, scale))


def _value_bounds(x, k: int) -> tuple[int, int, int]:
    """Integers ``(lo_num, hi_num, den)`` with ``lo_num/den < x < hi_num/den``."""
    scale = 10**k
    root = math.isqrt(x.N * scale * scale)
    den = x.d * scale
    if x.eps > 0:
        return root + x.c * scale, root + 1 + x.c * scale, den
    return x.c * scale - root - 1, x.c * scale - root, den


def value_interval(x, k: int) -> tuple[Fraction, Fraction]:
    lo, hi, den = _value_bounds(x, k)
    return Fraction(lo, den), Fraction(hi, den)


def oracle_floor(x, k: int) -> int | None:
    """Floor of x from a k-digit enclosure, or None if the enclosure straddles an integer."""
    lo, hi, den = _value_bounds(x, k)
    a, b = lo // den, hi // den
    # hi itself may sit exactly on the next integer while x stays below it
    if a == b or (b == a + 1 and hi % den == 0):
        return a
    return None


def oracle_floor_resolved(x, start: int = START_DIGITS, cap: int = FLOOR_DIGIT_CAP) -> int:
    k = start
    while k <= cap:
        f = oracle_floor(x, k)
        if f is not None:
            return f
        k *= 2
    raise OracleCapExceeded(f"floor of {x} unresolved at {cap} digits")


def _common_cf_prefix(n1: int, n2: int, den: int, limit: int) -> list[int]:
    # Euclid on both endpoints in lockstep; every x strictly between them
    # shares the partial quotients emitted while both agree.
    d1 = d2 = den
    out = []
    while len(out) < limit:
        a1, r1 = divmod(n1, d1)
        a2, r2 = divmod(n2, d2)
        if a1 != a2:
            break
        out.append(a1)
        if r1 == 0 or r2 == 0:
            break
        n1, d1, n2, d2 = d1, r1, d2, r2
    return out


def oracle_cf(x, n_terms: int, start: int = START_DIGITS, cap: int = 1 << 16) -> list[int]:
    """First ``n_terms`` partial quotients of x, certified by interval endpoints."""
    k = start
    while k <= cap:
        lo, hi, den = _value_bounds(x, k)
        prefix = _common_cf_prefix(lo, hi, den, n_terms)
        if len(prefix) >= n_terms:
            return prefix
        k *= 2
    raise OracleCapExceeded(f"{n_terms} terms of {x} unresolved at {cap} digits")


def oracle_decimal(x, digits: int = 12) -> str:
    """Decimal string of x truncated to ``digits`` places (annotation only)."""
    lo, hi, den = _value_bounds(x, digits + 8)
    scaled = lo * 10**digits // den
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def oracle_close(x, y, k: int = 50) -> bool:
    """True when the k-digit enclosures of x and y overlap."""
    xl, xh = value_interval(x, k)
    yl, yh = value_interval(y, k)
    return xl < yh and yl < xh
