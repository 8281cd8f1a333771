"""Acceptance criteria, one test per criterion.

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section of the terminal summary for one PASS/FAIL line per criterion.
"""

import math
import random
import time
from fractions import Fraction

import pytest

from surd_strategies import random_surd
from surdpath.cf import (
    Orientation,
    cf_expand,
    direction_runs,
    galois_check,
    is_reduced_surd,
    runs_per_period,
    sqrt_cf,
)
from surdpath.core import (
    QuadraticSurd,
    floor_surd,
    is_perfect_square,
    left_child,
    left_parent,
    right_child,
    right_parent,
)
from surdpath.lpp import L, R, check_unique_parentage, palindrome_checks, trace_lpp
from surdpath.notation import parse_surd
from surdpath.oracle import oracle_cf, oracle_floor_resolved
from surdpath.render import classic_cw_sequence
from surdpath.sweep import valid_triples

ORACLE_SAMPLE = 1000
ORACLE_N_MAX = 2000
ORACLE_TERMS = 60
ROUND_TRIPS = 10_000
SWEEP_N_MAX = 300


def steps_of(trace):
    return "".join(s.value for s in trace.steps)


@pytest.mark.criterion(1, "sqrt(5) LPP regression, exact, < 1 ms")
def test_sqrt5_regression():
    alpha = QuadraticSurd(5, 1, 0, 1)
    trace_lpp(alpha)  # warm caches
    elapsed = []
    for _ in range(5):
        t0 = time.perf_counter()
        t = trace_lpp(alpha)
        elapsed.append(time.perf_counter() - t0)
    assert t.c_seq == [0, 1, 2, 1, 0, -1, -2, -1, 0]
    assert t.d_seq == [1, 1, 1, 4, 5, 4, 1, 1, 1]
    assert steps_of(t) == "rrllllrr"
    assert t.period == 8 and t.symmetry_index == 8
    assert t.c_seq[4] == 0 and t.nodes[4] == QuadraticSurd(5, 1, 0, 5)
    assert min(elapsed) < 1e-3


@pytest.mark.criterion(2, "(sqrt(3)+1)/2: T=3, steps l,l,r")
def test_sqrt3_plus_1_over_2():
    t = trace_lpp(parse_surd("(sqrt(3)+1)/2"))
    assert t.period == 3
    assert t.steps == [L, L, R]


@pytest.mark.criterion(3, "(sqrt(34)+1)/3: T=10, no symmetry index, node labels")
def test_sqrt34_plus_1_over_3():
    t = trace_lpp(parse_surd("(sqrt(34)+1)/3"))
    assert t.period == 10
    assert t.symmetry_index is None
    expected = [(1, 3), (4, 3), (-2, 5), (3, 5), (-2, 6), (4, 6), (1, 11), (-2, 10), (-5, 3), (-2, 3)]
    assert [(x.c, x.d) for x in t.nodes[:10]] == expected
    assert all(x.N == 34 and x.eps == 1 for x in t.nodes)


@pytest.mark.criterion(4, "(sqrt(19)+4)/3: runs, orientations, CF, reversal, reverse reading")
def test_sqrt19_plus_4_over_3():
    x = parse_surd("(sqrt(19)+4)/3")
    t = trace_lpp(x)
    runs = direction_runs(t, runs_per_period(t))
    assert [r.t for r in runs] == [8, 2, 1, 3, 1, 2]
    LR, RL = Orientation.LR, Orientation.RL
    assert [r.orientation for r in runs[1:6]] == [LR, RL, LR, RL, LR]
    assert runs[1].y == parse_surd("(sqrt(19)-4)/3")
    exp = cf_expand(x)
    assert exp.purely_periodic and exp.period == [2, 1, 3, 1, 2, 8]
    rep = galois_check(x)
    assert rep.alpha_period == [8, 2, 1, 3, 1, 2]
    assert rep.reversal and rep.reverse_reading


@pytest.mark.criterion(5, "(sqrt(37)+5)/3: LPP m=6, t-pattern [3,2,1,3,2,1], least CF period 3")
def test_sqrt37_plus_5_over_3():
    x = parse_surd("(sqrt(37)+5)/3")
    t = trace_lpp(x)
    m = runs_per_period(t)
    t_pattern = [r.t for r in direction_runs(t, m)]
    least = cf_expand(x).least_period_len
    print(f"\n(sqrt(37)+5)/3: m={m} t-pattern={t_pattern} least CF period={least}")
    assert m == 6
    assert least == 3
    assert t_pattern == [3, 2, 1, 3, 2, 1]


@pytest.mark.criterion(6, "Legendre sweep 2 <= f,g <= 40, 100% pass, < 10 s")
def test_legendre_sweep():
    t0 = time.perf_counter()
    failures, count = [], 0
    for f in range(2, 41):
        for g in range(2, 41):
            if math.gcd(f, g) != 1 or f <= g or (is_perfect_square(f) and is_perfect_square(g)):
                continue
            count += 1
            _, rep = sqrt_cf(f, g)
            if not (rep.interior_palindrome and rep.terminal_twice_a0):
                failures.append((f, g))
    elapsed = time.perf_counter() - t0
    print(f"\nLegendre sweep: {count} radicands, {len(failures)} failing, {elapsed:.2f} s")
    assert count > 0 and failures == []
    assert elapsed < 10


@pytest.mark.criterion(7, "Galois sweep over reduced surds with N <= 300, 100% pass, < 30 s")
def test_galois_sweep():
    t0 = time.perf_counter()
    failures, count = [], 0
    for N, p, q in valid_triples(SWEEP_N_MAX):
        x = QuadraticSurd(N, 1, p, q)
        if not is_reduced_surd(x):
            continue
        count += 1
        rep = galois_check(x)  # compares a_n with t_n over two LPP periods of -1/x*
        if not (rep.purely_periodic and rep.reversal and rep.a_equals_t and rep.horizon == 2 * rep.lpp_m):
            failures.append((N, p, q))
    elapsed = time.perf_counter() - t0
    print(f"\nGalois sweep: {count} reduced surds, {len(failures)} failing, {elapsed:.2f} s")
    assert count > 0 and failures == []
    assert elapsed < 30


@pytest.mark.criterion(8, "oracle equivalence: 1000 surds, N <= 2000, 60 terms and floors")
def test_oracle_equivalence():
    rng = random.Random(20261015)
    bad = []
    for _ in range(ORACLE_SAMPLE):
        x = random_surd(rng, ORACLE_N_MAX)
        if cf_expand(x).take(ORACLE_TERMS) != oracle_cf(x, ORACLE_TERMS):
            bad.append(("cf", x))
        if floor_surd(x) != oracle_floor_resolved(x):
            bad.append(("floor", x))
    assert bad == []


@pytest.mark.criterion(9, "property suite: round trips, bounds, periodicity, parentage, p=0 palindromes")
def test_property_suite():
    rng = random.Random(7)
    done = 0
    while done < ROUND_TRIPS:
        x = random_surd(rng, 5000)
        if x.eps != 1 or x.c * x.c >= x.N:
            continue  # parents are defined on path labels only
        done += 1
        assert right_parent(right_child(x)) == x
        lc = left_child(x)
        if lc.eps == 1:
            assert left_parent(lc) == x
        if (x.c - x.d) ** 2 < x.N:
            assert right_child(right_parent(x)) == x
        else:
            assert left_child(left_parent(x)) == x

    n_inputs = 0
    for N, p, q in valid_triples(SWEEP_N_MAX):
        n_inputs += 1
        alpha = QuadraticSurd(N, 1, p, q)
        t = trace_lpp(alpha)
        for c, d in zip(t.c_seq, t.d_seq):
            assert c * c < N and 0 < d <= N - c * c, (N, p, q)
        # first repeat of a value is the root itself, at index T
        assert t.nodes[-1] == alpha and len(set(t.nodes[:-1])) == t.period, (N, p, q)
        assert check_unique_parentage(t), (N, p, q)
        if p == 0 and N > q * q:
            assert t.steps[0] is R, (N, p, q)
            assert palindrome_checks(t).full_palindrome, (N, p, q)
    assert n_inputs == sum(1 for _ in valid_triples(SWEEP_N_MAX))


@pytest.mark.criterion(10, "classic tree: first 15 labels, no duplicates, reciprocal levels")
def test_classic_tree():
    first = classic_cw_sequence(15)
    expected = [1, (1, 2), 2, (1, 3), (3, 2), (2, 3), 3, (1, 4), (4, 3), (3, 5), (5, 2), (2, 5), (5, 3), (3, 4), 4]
    assert first == [Fraction(*e) if isinstance(e, tuple) else Fraction(e) for e in expected]

    seq = classic_cw_sequence(2**10 - 1)
    assert len(set(seq)) == len(seq)
    seq = classic_cw_sequence(2**11 - 1)  # levels 0..10
    for level in range(11):
        row = seq[2**level - 1 : 2 ** (level + 1) - 1]
        assert {1 / v for v in row} == set(row)
        # the level is mirror-symmetric under x -> 1/x
        assert [1 / v for v in reversed(row)] == row
