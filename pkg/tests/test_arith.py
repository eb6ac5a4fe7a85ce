from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

from p2tensor.arith import (
    QuadraticNumber,
    compare,
    format_rational,
    parse_rational,
    solve_monic_quadratic,
)

Q = QuadraticNumber


def test_golden_gap_exceeds_one_third():
    x = Q(Fraction(3, 2), Fraction(-1, 2), 5)
    assert compare(x, Fraction(1, 3)) == 1
    assert compare(Fraction(1, 3), x) == -1


def test_equality_is_mathematical():
    assert compare(Q(0, 1, 8), Q(0, 2, 2)) == 0
    assert Q(0, 1, 8) == Q(0, 2, 2)
    assert Q(0, 1, Fraction(1, 4)) == Fraction(1, 2)
    assert Q(3, 5, 0).is_rational()


def test_roots_of_x2_3x_minus_5():
    lo, hi = solve_monic_quadratic(3, -5)
    assert lo == Q(Fraction(-3, 2), Fraction(-1, 2), 29)
    assert hi == Q(Fraction(-3, 2), Fraction(1, 2), 29)
    assert lo < hi


def test_double_root_and_no_root():
    assert solve_monic_quadratic(0, 0) == (Q(0), Q(0))
    assert solve_monic_quadratic(0, 1) is None


def test_parse_and_format():
    assert parse_rational("-17/2") == Fraction(-17, 2)
    assert parse_rational(" 4 ") == 4
    assert format_rational(Fraction(6, 4)) == "3/2"
    with pytest.raises(ValueError):
        parse_rational("0.5")
    with pytest.raises(ValueError):
        parse_rational("1/0")
    assert str(Q(1, 2, 3)) == "(1)+(2)*sqrt(3)"


def test_cross_radicand_arithmetic_rejected():
    with pytest.raises(ValueError):
        Q(0, 1, 2) + Q(0, 1, 3)


small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
radicand = st.integers(min_value=0, max_value=60)
quad = st.builds(Q, small, small, radicand)


@given(quad)
def test_reflexive(x):
    assert compare(x, x) == 0


@given(quad, quad)
def test_antisymmetric(x, y):
    assert compare(x, y) == -compare(y, x)


@given(quad, quad, quad)
def test_transitive(x, y, z):
    if compare(x, y) <= 0 and compare(y, z) <= 0:
        assert compare(x, z) <= 0


@given(quad, quad)
def test_agrees_with_float(x, y):
    gap = float(x) - float(y)
    if abs(gap) > 1e-6:
        assert compare(x, y) == (1 if gap > 0 else -1)


@given(small, small)
def test_vieta(b, c):
    roots = solve_monic_quadratic(b, c)
    if b * b - 4 * c < 0:
        assert roots is None
        return
    r1, r2 = roots
    assert r1 <= r2
    assert r1 + r2 == -b
    assert r1 * r2 == c


@given(quad, quad)
def test_same_radicand_field_ops(x, y):
    y = Q(y.a, y.b, x.d) if x.d else y
    s = x + y
    assert math.isclose(float(s), float(x) + float(y), abs_tol=1e-9)
    p = x * y
    assert math.isclose(float(p), float(x) * float(y), rel_tol=1e-9, abs_tol=1e-9)
