"""Generators of valid surds for property tests (hypothesis and seeded random)."""

import math
import random

from hypothesis import strategies as st

from surdpath.core import QuadraticSurd, is_perfect_square


def divisors(n):
    n = abs(n)
    return [k for k in range(1, n + 1) if n % k == 0]


def non_squares(n_max):
    return st.integers(2, n_max).filter(lambda n: not is_perfect_square(n))


@st.composite
def lpp_roots(draw, n_max=200):
    """``(sqrt(N)+p)/q`` with p^2 < N and q | N - p^2."""
    N = draw(non_squares(n_max))
    s = math.isqrt(N)
    p = draw(st.integers(-s, s))
    q = draw(st.sampled_from(divisors(N - p * p)))
    return QuadraticSurd(N, 1, p, q)


@st.composite
def surds(draw, n_max=200):
    """Any valid positive ``(eps*sqrt(N)+c)/d``, including eps=-1 and |c| > sqrt(N)."""
    N = draw(non_squares(n_max))
    s = math.isqrt(N)
    eps = draw(st.sampled_from((1, -1)))
    if eps == 1:
        c = draw(st.integers(-s, 4 * s + 4))
    else:
        c = draw(st.integers(s + 1, 4 * s + 4))
    d = draw(st.sampled_from(divisors(N - c * c)))
    return QuadraticSurd(N, eps, c, d)


def random_surd(rng: random.Random, n_max: int) -> QuadraticSurd:
    """Seeded counterpart of ``surds`` for large fixed samples."""
    while True:
        N = rng.randint(2, n_max)
        if not is_perfect_square(N):
            break
    s = math.isqrt(N)
    eps = rng.choice((1, -1))
    c = rng.randint(-s, 4 * s + 4) if eps == 1 else rng.randint(s + 1, 4 * s + 4)
    m = abs(N - c * c)
    small = [k for k in range(1, math.isqrt(m) + 1) if m % k == 0]
    ds = small + [m // k for k in small]
    return QuadraticSurd(N, eps, c, rng.choice(ds))
