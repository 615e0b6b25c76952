from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eisencomb.halfint import HalfInt, NotHalfIntegral

halfints = st.integers(-10**6, 10**6).map(HalfInt)


def test_basic_values():
    assert str(HalfInt(-3)) == "-3/2"
    assert str(HalfInt(4)) == "2"
    assert HalfInt(1) + HalfInt(1) == 1
    assert HalfInt.ratio(3, 2) == HalfInt(3)
    assert HalfInt.of(Fraction(-5, 2)).twice == -5


def test_rejects_non_half_integers():
    with pytest.raises(NotHalfIntegral):
        HalfInt.ratio(1, 3)
    with pytest.raises(NotHalfIntegral):
        HalfInt.of(Fraction(1, 4))
    with pytest.raises(ValueError):
        HalfInt(1).to_int()
    with pytest.raises(TypeError):
        HalfInt(1.0)


@given(halfints, halfints)
def test_arithmetic_matches_fractions(x, y):
    assert (x + y).to_fraction() == x.to_fraction() + y.to_fraction()
    assert (x - y).to_fraction() == x.to_fraction() - y.to_fraction()
    assert (-x).to_fraction() == -x.to_fraction()
    assert (x < y) == (x.to_fraction() < y.to_fraction())
    assert x.is_integer() == (x.to_fraction().denominator == 1)


@given(halfints)
def test_parse_round_trip(x):
    assert HalfInt.parse(str(x)) == x
