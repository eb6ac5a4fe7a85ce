"""Exceptional slopes, the Drezet-Le Potier curve and exceptional pairs.

Exceptional slopes are indexed by dyadic rationals through the recursion
``eps(n) = n`` and ``eps((2p+1)/2^(q+1)) = eps(p/2^q) . eps((p+1)/2^q)``.
Every slope ``alpha`` owns the open interval ``I_alpha`` of half-width
``x_alpha``; these intervals cover all rationals and are pairwise disjoint,
which is what :func:`locate` bisects on.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from .arith import QuadraticNumber, as_fraction, compare, format_rational
from .chern import ChernCharacter, hilbert_p

__all__ = [
    "ExceptionalSlope",
    "LocateKind",
    "LocateResult",
    "DepthExceeded",
    "DEFAULT_MAX_ORDER",
    "epsilon",
    "exceptional_from_index",
    "parse_dyadic",
    "dot",
    "decompose",
    "mutation_slopes",
    "locate",
    "delta",
    "exists_positive_dimensional_moduli",
    "is_exceptional_character",
    "exceptional_slope_of",
    "exc_pair_cohomology",
    "exc_hom_globally_generated",
    "exc_globally_generated",
]

DEFAULT_MAX_ORDER = 64


class DepthExceeded(ArithmeticError):
    """Interval location gave up after the configured number of refinements."""


@dataclass(frozen=True)
class ExceptionalSlope:
    index: Fraction  # dyadic p/2^q
    mu: Fraction
    rank: int
    disc: Fraction

    @property
    def p(self) -> int:
        return self.index.numerator

    @property
    def order(self) -> int:
        return self.index.denominator.bit_length() - 1

    @property
    def half_width(self) -> QuadraticNumber:
        """``x_alpha = (3 - sqrt(5 + 8 Delta_alpha)) / 2``."""
        # 5 + 8 Delta = (9 r^2 - 4) / r^2
        r = self.rank
        return QuadraticNumber(Fraction(3, 2), Fraction(-1, 2 * r), 9 * r * r - 4)

    @property
    def left(self) -> QuadraticNumber:
        return self.half_width * -1 + self.mu

    @property
    def right(self) -> QuadraticNumber:
        return self.half_width + self.mu

    @property
    def is_integer(self) -> bool:
        return self.index.denominator == 1

    def character(self) -> ChernCharacter:
        """``ch(E_alpha)``."""
        r, mu = self.rank, self.mu
        return ChernCharacter(r, int(r * mu), r * (mu * mu / 2 - self.disc))

    def __neg__(self) -> "ExceptionalSlope":
        return exceptional_from_index(-self.index)

    def shift(self, n: int) -> "ExceptionalSlope":
        """The slope of ``E_alpha(n)``."""
        return exceptional_from_index(self.index + n)

    def __str__(self) -> str:
        return format_rational(self.mu)


def parse_dyadic(text: str) -> Fraction:
    """Parse ``"p/2^q"`` or a reduced rational with power-of-two denominator."""
    t = text.strip().replace(" ", "")
    if "^" in t:
        num, _, rest = t.partition("/")
        base, _, exp = rest.partition("^")
        if base != "2":
            raise ValueError(f"dyadic index must have base 2: {text!r}")
        x = Fraction(int(num), 2 ** int(exp))
    else:
        from .arith import parse_rational

        x = parse_rational(t)
    den = x.denominator
    if den & (den - 1):
        raise ValueError(f"not a dyadic rational: {text!r}")
    return x


def dot(alpha: ExceptionalSlope, beta: ExceptionalSlope) -> Fraction:
    """``alpha.beta = (alpha+beta)/2 + (Delta_beta - Delta_alpha)/(3 + alpha - beta)``."""
    a, b = alpha.mu, beta.mu
    return (a + b) / 2 + (beta.disc - alpha.disc) / (3 + a - b)


@lru_cache(maxsize=None)
def _epsilon_cached(index: Fraction) -> ExceptionalSlope:
    if index.denominator == 1:
        n = index.numerator
        return ExceptionalSlope(index, Fraction(n), 1, Fraction(0))
    q = index.denominator
    p = index.numerator
    left = _epsilon_cached(Fraction(p - 1, q))
    right = _epsilon_cached(Fraction(p + 1, q))
    mu = dot(left, right)
    r = mu.denominator
    disc = Fraction(1, 2) * (1 - Fraction(1, r * r))
    return ExceptionalSlope(index, mu, r, disc)


def exceptional_from_index(index) -> ExceptionalSlope:
    index = as_fraction(index)
    den = index.denominator
    if den & (den - 1):
        raise ValueError(f"{index} is not dyadic")
    return _epsilon_cached(index)


def epsilon(p: int, q: int = 0) -> ExceptionalSlope:
    """The exceptional slope ``eps(p/2^q)``."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    return exceptional_from_index(Fraction(p, 2**q))


def decompose(nu: ExceptionalSlope) -> Tuple[ExceptionalSlope, ExceptionalSlope]:
    """Parents ``(alpha, beta)`` with ``nu = alpha.beta``.

    Integers ``n`` use the convention ``(n-1, n+1)``, which makes the
    resolution triads consecutive line bundles.
    """
    if nu.is_integer:
        return nu.shift(-1), nu.shift(1)
    step = Fraction(1, nu.index.denominator)
    return exceptional_from_index(nu.index - step), exceptional_from_index(nu.index + step)


@dataclass(frozen=True)
class MutationSlopes:
    alpha: ExceptionalSlope
    eta: ExceptionalSlope
    zeta: ExceptionalSlope
    omega: ExceptionalSlope
    i: int


def mutation_slopes(beta: ExceptionalSlope) -> MutationSlopes:
    """Slopes in the two mutation sequences building ``E_beta`` from lower order.

    ``0 -> E_zeta -> E_alpha (x) Hom(E_alpha, E_beta) -> E_beta -> 0`` and
    ``0 -> E_beta -> E_eta (x) Hom(E_beta, E_eta)^* -> E_omega -> 0``.
    """
    if beta.is_integer:
        raise ValueError("mutation slopes need a non-integer exceptional slope")
    q = beta.order
    p = beta.p - 1  # beta = eps((p+1)/2^q) with p even
    den = 2**q
    i = p % 4
    alpha = exceptional_from_index(Fraction(p, den))
    eta = exceptional_from_index(Fraction(p + 2, den))
    if i == 0:
        zeta = exceptional_from_index(Fraction(p + 4, den) - 3)
        omega = exceptional_from_index(Fraction(p + 4, den))
    else:
        zeta = exceptional_from_index(Fraction(p - 2, den))
        omega = exceptional_from_index(Fraction(p - 2, den) + 3)
    return MutationSlopes(alpha, eta, zeta, omega, i)


class LocateKind(enum.Enum):
    INTERIOR = "interior"
    LEFT_ENDPOINT = "left-endpoint"
    RIGHT_ENDPOINT = "right-endpoint"
    DEPTH_EXCEEDED = "depth-exceeded"


@dataclass(frozen=True)
class LocateResult:
    kind: LocateKind
    slope: Optional[ExceptionalSlope] = None

    @property
    def found(self) -> bool:
        return self.kind is not LocateKind.DEPTH_EXCEEDED


def _floor(t: QuadraticNumber) -> int:
    n = math.floor(float(t))
    while compare(t, n) < 0:
        n -= 1
    while compare(t, n + 1) >= 0:
        n += 1
    return n


def locate(t, max_order: int = DEFAULT_MAX_ORDER) -> LocateResult:
    """Find the exceptional slope whose interval contains ``t``.

    Dyadic bisection between adjacent exceptional slopes; every test is an
    exact comparison against ``alpha +- x_alpha``.
    """
    if max_order < 0:
        raise ValueError("max_order must be nonnegative")
    t = QuadraticNumber.coerce(t)
    n = _floor(t)
    lo = exceptional_from_index(n)
    hi = exceptional_from_index(n + 1)

    c = compare(t, lo.right)
    if c < 0:
        return LocateResult(LocateKind.INTERIOR, lo)
    if c == 0:
        return LocateResult(LocateKind.RIGHT_ENDPOINT, lo)
    c = compare(t, hi.left)
    if c > 0:
        return LocateResult(LocateKind.INTERIOR, hi)
    if c == 0:
        return LocateResult(LocateKind.LEFT_ENDPOINT, hi)

    lo_i, hi_i = lo.index, hi.index
    while True:
        mid_i = (lo_i + hi_i) / 2
        s = exceptional_from_index(mid_i)
        if s.order > max_order:
            return LocateResult(LocateKind.DEPTH_EXCEEDED)
        c = compare(t, s.left)
        if c < 0:
            hi_i = mid_i
            continue
        if c == 0:
            return LocateResult(LocateKind.LEFT_ENDPOINT, s)
        c = compare(t, s.right)
        if c > 0:
            lo_i = mid_i
            continue
        if c == 0:
            return LocateResult(LocateKind.RIGHT_ENDPOINT, s)
        return LocateResult(LocateKind.INTERIOR, s)


def _located(t, max_order: int) -> LocateResult:
    res = locate(t, max_order)
    if not res.found:
        raise DepthExceeded(f"could not place {t} within order {max_order}")
    return res


@lru_cache(maxsize=65536)
def _delta_rational(mu: Fraction, max_order: int) -> Fraction:
    res = _located(mu, max_order)
    alpha = res.slope
    return hilbert_p(-abs(mu - alpha.mu)) - alpha.disc


def delta(mu, max_order: int = DEFAULT_MAX_ORDER):
    """The Drezet-Le Potier function ``delta(mu)``.

    Exact for rational ``mu``.  For a quadratic irrational returns ``1/2`` at
    interval endpoints and a :class:`QuadraticNumber` otherwise.
    """
    if isinstance(mu, QuadraticNumber) and not mu.is_rational():
        res = _located(mu, max_order)
        if res.kind is not LocateKind.INTERIOR:
            return Fraction(1, 2)
        return hilbert_p(-abs(mu - res.slope.mu)) - res.slope.disc
    return _delta_rational(as_fraction(mu), max_order)


def exceptional_slope_of(mu, max_order: int = DEFAULT_MAX_ORDER) -> Optional[ExceptionalSlope]:
    """The exceptional slope equal to ``mu``, or ``None`` if ``mu`` is not one."""
    mu = as_fraction(mu)
    s = _located(mu, max_order).slope
    return s if s.mu == mu else None


def is_exceptional_character(v: ChernCharacter, max_order: int = DEFAULT_MAX_ORDER) -> bool:
    """True for (multiples of) exceptional bundle characters."""
    if v.r <= 0 or not v.is_integral():
        return False
    s = exceptional_slope_of(v.mu, max_order)
    return s is not None and v.delta == s.disc


def exists_positive_dimensional_moduli(v: ChernCharacter, max_order: int = DEFAULT_MAX_ORDER) -> bool:
    """Drezet-Le Potier criterion ``Delta(v) >= delta(mu(v))``."""
    if v.r <= 0:
        raise ValueError("positive rank character required")
    if not v.is_integral():
        raise ValueError(f"character {v} is not integral")
    return v.delta >= delta(v.mu, max_order)


def exc_pair_cohomology(a: ExceptionalSlope, b: ExceptionalSlope) -> Tuple[int, int, int]:
    """Cohomology dimensions of ``E_a (x) E_b``; at most one is nonzero."""
    mu = a.mu + b.mu
    chi = a.rank * b.rank * (hilbert_p(mu) - a.disc - b.disc)
    assert chi.denominator == 1
    chi = int(chi)
    if mu >= 0:
        assert chi >= 0
        return (chi, 0, 0)
    if mu > -3:
        assert chi <= 0
        return (0, -chi, 0)
    assert chi >= 0
    return (0, 0, chi)


def exc_globally_generated(e: ExceptionalSlope) -> bool:
    return e.mu >= 0


def exc_hom_globally_generated(e: ExceptionalSlope, f: ExceptionalSlope) -> bool:
    """``Hom(E_e, E_f)`` is globally generated iff an integer lies in ``[mu_e, mu_f]``."""
    return math.floor(f.mu) >= math.ceil(e.mu)
