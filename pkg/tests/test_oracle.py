from fractions import Fraction

import pytest
from hypothesis import given, settings

from surd_strategies import surds
from surdpath.core import QuadraticSurd, floor_surd
from surdpath.notation import parse_surd
from surdpath.oracle import (
    OracleCapExceeded,
    oracle_cf,
    oracle_close,
    oracle_decimal,
    oracle_floor,
    oracle_floor_resolved,
    sqrt_interval,
    value_interval,
)


def test_sqrt_interval_encloses():
    iv = sqrt_interval(2, 20)
    assert iv.lo * iv.lo < 2 < iv.hi * iv.hi
    assert iv.width == Fraction(1, 10**20)


@given(surds(2000))
def test_value_interval_encloses(x):
    lo, hi = value_interval(x, 30)
    s, r = x.parts
    # lo < s*sqrt(N) + r < hi  <=>  sign tests on squares
    for bound, want in ((lo, 1), (hi, -1)):
        diff = r - bound
        # sign of s*sqrt(N) + diff
        if s * diff >= 0:
            sign = 1 if (s > 0 or diff > 0) else -1
        else:
            sign = (1 if s > 0 else -1) * (1 if s * s * x.N > diff * diff else -1)
        assert sign == want


def test_floor_known():
    assert oracle_floor(parse_surd("(sqrt(19)+4)/3"), 20) == 2
    assert oracle_floor(parse_surd("(-sqrt(2)+2)/1"), 20) == 0


@given(surds(2000))
def test_floor_resolves_at_any_precision(x):
    # enclosure endpoints sit on the integer grid of isqrt, so no straddle
    assert oracle_floor(x, 0) == oracle_floor(x, 3) == floor_surd(x)


def test_floor_near_integer():
    x = QuadraticSurd(10**12 - 1, 1, -999999, 1)  # 1 - 5e-7
    assert oracle_floor_resolved(x) == floor_surd(x) == 0


@settings(max_examples=300)
@given(surds(2000))
def test_floor_matches_exact(x):
    assert oracle_floor_resolved(x) == floor_surd(x)


def test_cf_known():
    assert oracle_cf(parse_surd("sqrt(19)"), 13) == [4, 2, 1, 3, 1, 2, 8, 2, 1, 3, 1, 2, 8]
    assert oracle_cf(parse_surd("sqrt(2)"), 200) == [1] + [2] * 199


def test_cap():
    with pytest.raises(OracleCapExceeded):
        oracle_cf(parse_surd("sqrt(2)"), 500, cap=40)


def test_decimal_and_close():
    assert oracle_decimal(parse_surd("sqrt(2)"), 10) == "1.4142135623"
    assert oracle_decimal(parse_surd("sqrt(5)/5"), 6) == "0.447213"
    assert oracle_close(parse_surd("sqrt(5)"), parse_surd("sqrt(20)/2"))
    assert not oracle_close(parse_surd("sqrt(5)"), parse_surd("sqrt(6)"))
