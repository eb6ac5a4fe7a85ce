import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from p2tensor.arith import QuadraticNumber
from p2tensor.chern import (
    ChernCharacter,
    SlopeDiscPoint,
    chi,
    chi_tensor,
    dual,
    hilbert_p,
    ideal_sheaf,
    line_bundle,
    minimal_integral_on_parabola,
    parse_character,
    serre_dual,
    tensor,
    twist,
)

O = line_bundle(0)


def test_hilbert_polynomial_values():
    assert hilbert_p(0) == 1
    assert hilbert_p(-1) == 0 and hilbert_p(-2) == 0
    assert hilbert_p(Fraction(1, 8)) == Fraction(153, 128)
    x = QuadraticNumber(0, 1, 2)
    assert hilbert_p(x) == QuadraticNumber(2, Fraction(3, 2), 2)


def test_euler_pairings():
    assert chi_tensor(O, O) == 1
    # (r, mu, Delta) = (4, 1, 9/4): 4 (P(1) - 9/4) = 3
    assert chi_tensor(ChernCharacter(4, 4, -7), O) == 3
    t = ChernCharacter.torsion(1, 0)
    assert chi_tensor(t, line_bundle(1)) == 1
    assert chi(ChernCharacter.torsion(3, 5)) == 5


def test_torsion_pairing_formula():
    rng = random.Random(3)
    for _ in range(50):
        d, e = rng.randint(1, 6), rng.randint(-9, 9)
        r, c1 = rng.randint(1, 5), rng.randint(-9, 9)
        w = ChernCharacter(r, c1, Fraction(c1 * c1, 2) - rng.randint(-5, 9))
        assert chi_tensor(ChernCharacter.torsion(d, e), w) == r * e + d * c1


def test_both_torsion_rejected():
    t = ChernCharacter.torsion(1, 0)
    with pytest.raises(ValueError):
        tensor(t, t)


def test_twist_dual_serre():
    assert twist(O, 2) == ChernCharacter(1, 2, 2)
    assert chi(twist(O, 2)) == 6
    v = ChernCharacter(4, 1, -7)
    assert serre_dual(v).c1 == -13
    assert serre_dual(v).mu == Fraction(-13, 4)
    assert serre_dual(v).delta == v.delta


def test_minimal_integral_points():
    got = minimal_integral_on_parabola(SlopeDiscPoint(Fraction(1, 4), Fraction(45, 32)))
    assert got == ChernCharacter(4, 1, Fraction(-11, 2))
    assert minimal_integral_on_parabola(SlopeDiscPoint(0, 1)) == ChernCharacter(1, 0, -1)
    u = minimal_integral_on_parabola(SlopeDiscPoint(Fraction(5, 4), Fraction(21, 32)))
    assert u == ChernCharacter(4, 5, Fraction(1, 2)) and u.c2 == 12


def test_minimal_rank_by_enumeration():
    rng = random.Random(11)
    for _ in range(60):
        mu = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        d = Fraction(rng.randint(0, 200), rng.choice([1, 2, 4, 8, 32, 64]))
        got = minimal_integral_on_parabola(SlopeDiscPoint(mu, d))
        r = next(
            r for r in range(1, 10**5)
            if (r * mu).denominator == 1 and ChernCharacter.from_mu_delta(r, mu, d).is_integral()
        )
        assert got.r == r and got.mu == mu and got.delta == d


def test_parse_character():
    assert parse_character("8 1 -17/2") == ChernCharacter(8, 1, Fraction(-17, 2))
    assert parse_character("0 3 1") == ChernCharacter.torsion(3, 1)
    with pytest.raises(ValueError):
        parse_character("1 0 1/2")
    with pytest.raises(ValueError):
        parse_character("1 0")
    assert ideal_sheaf(2, 1) == parse_character("1 1 -3/2")


chars = st.builds(
    lambda r, c1, c2: ChernCharacter(r, c1, Fraction(c1 * c1, 2) - c2),
    st.integers(1, 8), st.integers(-15, 15), st.integers(-30, 30),
)


@given(chars, chars)
def test_pairing_symmetric(v, w):
    assert chi_tensor(v, w) == chi_tensor(w, v)
    assert chi_tensor(v, w).denominator == 1


@given(chars, chars)
def test_slope_and_disc_additive(v, w):
    t = tensor(v, w)
    assert t.mu == v.mu + w.mu
    assert t.delta == v.delta + w.delta
    assert chi_tensor(v, w) == v.r * w.r * (hilbert_p(v.mu + w.mu) - v.delta - w.delta)


@given(chars, chars, st.integers(-6, 6))
def test_twisted_pairing_is_quadratic(v, w, n):
    expected = v.r * w.r * (hilbert_p(v.mu + w.mu + n) - v.delta - w.delta)
    assert chi_tensor(v, twist(w, n)) == expected


@given(chars)
def test_involutions(v):
    assert dual(dual(v)) == v
    assert serre_dual(serre_dual(v)) == v
    assert chi(serre_dual(v)) == chi(v)


@given(st.integers(1, 8), st.integers(-15, 15), st.integers(-60, 60))
def test_integrality_matches_c2(r, c1, twice_ch2):
    v = ChernCharacter(r, c1, Fraction(twice_ch2, 2))
    assert v.is_integral() == ((c1 * c1 - twice_ch2) % 2 == 0)
