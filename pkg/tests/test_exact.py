import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from hodgecone.exact import (QuadraticSurd, divide_or_inf, make_root_value, positive_part,
                             simplify, values_equal)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
radicands = st.integers(min_value=1, max_value=400)


def _mp(x: QuadraticSurd):
    mpmath.mp.dps = 60
    r = mpmath.mpf(x.rational.numerator) / x.rational.denominator
    c = mpmath.mpf(x.coeff.numerator) / x.coeff.denominator
    return r + c * mpmath.sqrt(x.radicand)


def test_canonical_form():
    assert QuadraticSurd(0, 1, 12) == QuadraticSurd(0, 2, 3)
    assert QuadraticSurd(0, 2, 3).radicand == 3
    four = QuadraticSurd(1, 3, 4)
    assert four.is_rational() and four.as_fraction() == 7
    assert hash(QuadraticSurd(Fraction(1, 2))) == hash(QuadraticSurd(Fraction(2, 4), 0, 1))


def test_sqrt_of_rationals():
    assert QuadraticSurd.sqrt(Fraction(9, 4)).as_fraction() == Fraction(3, 2)
    s = QuadraticSurd.sqrt(Fraction(1, 2))
    assert s.coeff == Fraction(1, 2) and s.radicand == 2
    with pytest.raises(ValueError):
        QuadraticSurd.sqrt(-1)
    with pytest.raises(ValueError):
        QuadraticSurd(0, 1, 0)


def test_irrational_as_fraction_raises():
    with pytest.raises(ValueError):
        QuadraticSurd(0, 1, 2).as_fraction()


def test_mixed_field_sum_refused():
    with pytest.raises(ValueError):
        QuadraticSurd(0, 1, 2) + QuadraticSurd(0, 1, 3)


@settings(max_examples=300, deadline=None)
@given(rationals, rationals, radicands, rationals, rationals, radicands)
def test_ordering_matches_high_precision(a, b, f, c, d, g):
    x, y = QuadraticSurd(a, b, f), QuadraticSurd(c, d, g)
    diff = _mp(x) - _mp(y)
    expect = 0 if abs(diff) < mpmath.mpf(10) ** -40 else (1 if diff > 0 else -1)
    assert (x > y) == (expect > 0)
    assert (x < y) == (expect < 0)
    assert (x == y) == (expect == 0)


@settings(max_examples=200, deadline=None)
@given(rationals, rationals, radicands, rationals)
def test_arithmetic_is_consistent_with_floats(a, b, f, k):
    x = QuadraticSurd(a, b, f)
    assert math.isclose(float(x * k), float(x) * float(k), rel_tol=1e-12, abs_tol=1e-12)
    assert math.isclose(float(x + k), float(x) + float(k), rel_tol=1e-12, abs_tol=1e-12)
    assert math.isclose(float(k - x), float(k) - float(x), rel_tol=1e-12, abs_tol=1e-12)
    assert abs(x) >= 0 and float(abs(x)) == pytest.approx(abs(float(x)), abs=1e-12)
    assert -(-x) == x


def test_comparisons_with_rationals_and_floats():
    r2 = QuadraticSurd.sqrt(2)
    assert Fraction(141, 100) < r2 < Fraction(142, 100)
    assert r2 > 1.4142 and r2 < 1.4143
    assert r2 * r2.coeff == r2  # coefficient one


def test_make_root_value_forms():
    v = make_root_value(-1, Fraction(25, 4), 1)
    assert simplify(v) == Fraction(-7, 2)
    w = make_root_value(1, 2, -1)
    assert isinstance(w, QuadraticSurd) and w.radicand == 2 and w.rational == -1
    f = make_root_value(1, 2.0, 0)
    assert isinstance(f, float) and f == pytest.approx(math.sqrt(2))
    big = make_root_value(1, Fraction(10**13 + 37, 1), 0)  # not factored, degrades to float
    assert isinstance(big, float)
    with pytest.raises(ValueError):
        make_root_value(1, Fraction(-1), 0)


def test_helpers():
    assert values_equal(Fraction(1, 3), QuadraticSurd(Fraction(1, 3)))
    assert values_equal(1 / 3, Fraction(1, 3))
    assert not values_equal(QuadraticSurd.sqrt(2), Fraction(1414213562, 10**9))
    assert values_equal(math.inf, math.inf) and not values_equal(math.inf, 1e300)
    assert positive_part(Fraction(-2)) == 0 and positive_part(QuadraticSurd.sqrt(3)) == QuadraticSurd.sqrt(3)
    assert positive_part(-0.5) == 0.0
    assert divide_or_inf(4, 0) == math.inf
    assert divide_or_inf(4, Fraction(3, 2)) == Fraction(8, 3)
    assert divide_or_inf(4, QuadraticSurd(2)) == 2
    assert divide_or_inf(4, QuadraticSurd.sqrt(2)) == pytest.approx(2 * math.sqrt(2))
