"""Chern character algebra on the projective plane.

A class in K(P^2) is stored as ``(r, c1, ch2)``.  Positive rank classes are
the usual vector-bundle characters, ``r == 0`` with ``c1 > 0`` is a
one-dimensional (torsion) class normalised by ``(d, chi)``, and arbitrary
integer ranks are allowed so that derived objects such as the two-term
complex ``K`` can be represented.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .arith import QuadraticNumber, as_fraction, format_rational, parse_rational

__all__ = [
    "ChernCharacter",
    "SlopeDiscPoint",
    "hilbert_p",
    "chi",
    "chi_tensor",
    "tensor",
    "dual",
    "twist",
    "serre_dual",
    "line_bundle",
    "ideal_sheaf",
    "minimal_integral_on_parabola",
    "primitive_integral",
    "parse_character",
]


def hilbert_p(x):
    """Hilbert polynomial of the structure sheaf, ``x^2/2 + 3x/2 + 1``."""
    if isinstance(x, QuadraticNumber):
        return x * x * Fraction(1, 2) + x * Fraction(3, 2) + 1
    x = as_fraction(x)
    return x * x / 2 + 3 * x / 2 + 1


@dataclass(frozen=True)
class ChernCharacter:
    r: int
    c1: int
    ch2: Fraction

    def __post_init__(self):
        r = as_fraction(self.r)
        c1 = as_fraction(self.c1)
        if r.denominator != 1 or c1.denominator != 1:
            raise ValueError("rank and c1 must be integers")
        object.__setattr__(self, "r", int(r))
        object.__setattr__(self, "c1", int(c1))
        object.__setattr__(self, "ch2", as_fraction(self.ch2))

    @classmethod
    def torsion(cls, d: int, euler_chi: int) -> "ChernCharacter":
        """The class ``(0, d, chi)`` of a sheaf supported on a degree ``d`` curve."""
        if d <= 0:
            raise ValueError("torsion classes need d > 0")
        return cls(0, d, Fraction(euler_chi) - Fraction(3 * d, 2))

    @classmethod
    def from_mu_delta(cls, r: int, mu, delta) -> "ChernCharacter":
        mu = as_fraction(mu)
        delta = as_fraction(delta)
        return cls(r, r * mu, r * (mu * mu / 2 - delta))

    @property
    def is_torsion(self) -> bool:
        return self.r == 0 and self.c1 > 0

    @property
    def c2(self) -> Fraction:
        return Fraction(self.c1 * self.c1, 2) - self.ch2

    @property
    def mu(self) -> Fraction:
        if self.r == 0:
            raise ValueError("slope undefined for rank zero")
        return Fraction(self.c1, self.r)

    @property
    def delta(self) -> Fraction:
        if self.r == 0:
            raise ValueError("discriminant undefined for rank zero")
        mu = self.mu
        return mu * mu / 2 - self.ch2 / self.r

    @property
    def euler_chi(self) -> Fraction:
        return chi(self)

    def point(self) -> "SlopeDiscPoint":
        return SlopeDiscPoint(self.mu, self.delta)

    def is_integral(self) -> bool:
        return self.c2.denominator == 1

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.r + other.r, self.c1 + other.c1, self.ch2 + other.ch2)

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.r - other.r, self.c1 - other.c1, self.ch2 - other.ch2)

    def __neg__(self) -> "ChernCharacter":
        return ChernCharacter(-self.r, -self.c1, -self.ch2)

    def __mul__(self, k: int) -> "ChernCharacter":
        if isinstance(k, ChernCharacter):
            return tensor(self, k)
        return ChernCharacter(k * self.r, k * self.c1, k * self.ch2)

    __rmul__ = __mul__

    def as_tuple(self) -> Tuple[int, int, Fraction]:
        return (self.r, self.c1, self.ch2)

    def __str__(self) -> str:
        return f"{self.r} {self.c1} {format_rational(self.ch2)}"


@dataclass(frozen=True)
class SlopeDiscPoint:
    mu: Fraction
    delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "mu", as_fraction(self.mu))
        object.__setattr__(self, "delta", as_fraction(self.delta))


def chi(v: ChernCharacter) -> Fraction:
    """Euler characteristic via Hirzebruch-Riemann-Roch, ``ch2 + 3/2 c1 + r``."""
    return v.ch2 + Fraction(3 * v.c1, 2) + v.r


def tensor(v: ChernCharacter, w: ChernCharacter) -> ChernCharacter:
    if v.is_torsion and w.is_torsion:
        raise ValueError("tensor of two torsion classes is not supported")
    return ChernCharacter(
        v.r * w.r,
        v.r * w.c1 + w.r * v.c1,
        v.r * w.ch2 + v.c1 * w.c1 + w.r * v.ch2,
    )


def chi_tensor(v: ChernCharacter, w: ChernCharacter) -> Fraction:
    """``chi(v (x) w)``; an integer whenever both classes are integral."""
    return chi(tensor(v, w))


def dual(v: ChernCharacter) -> ChernCharacter:
    return ChernCharacter(v.r, -v.c1, v.ch2)


def line_bundle(n: int) -> ChernCharacter:
    return ChernCharacter(1, n, Fraction(n * n, 2))


def ideal_sheaf(n: int, a: int = 0) -> ChernCharacter:
    """Character of ``I_Z(a)`` with ``Z`` of length ``n``."""
    return ChernCharacter(1, a, Fraction(a * a, 2) - n)


def twist(v: ChernCharacter, n: int) -> ChernCharacter:
    return tensor(v, line_bundle(n))


def serre_dual(v: ChernCharacter) -> ChernCharacter:
    return twist(dual(v), -3)


def primitive_integral(r, c1, ch2) -> ChernCharacter:
    """Smallest positive multiple of the ray through ``(r, c1, ch2)`` that is integral.

    Integral classes are exactly the integer points in the coordinates
    ``(r, c1, ch2 - c1/2)``; the ray is scaled to its primitive vector there.
    The ray must have positive rank.
    """
    r, c1, ch2 = (as_fraction(t) for t in (r, c1, ch2))
    if r <= 0:
        raise ValueError("ray must have positive rank")
    coords = [r, c1, ch2 - c1 / 2]
    den = math.lcm(*(t.denominator for t in coords))
    ints = [int(t * den) for t in coords]
    g = 0
    for t in ints:
        g = math.gcd(g, t)
    ints = [t // g for t in ints]
    rr, cc, tt = ints
    return ChernCharacter(rr, cc, Fraction(tt) + Fraction(cc, 2))


def minimal_integral_on_parabola(p: SlopeDiscPoint) -> ChernCharacter:
    """Smallest-rank integral character with the given slope and discriminant."""
    mu, delta = p.mu, p.delta
    return primitive_integral(1, mu, mu * mu / 2 - delta)


def parse_character(text: str, integral: bool = True) -> ChernCharacter:
    """Parse ``"r c1 ch2"`` (torsion classes as ``"0 d chi"``).

    With ``integral=False`` rational classes with non-integer ``c2`` are kept.
    """
    parts = text.replace(",", " ").split()
    if len(parts) != 3:
        raise ValueError(f"expected three exact rationals 'r c1 ch2', got {text!r}")
    r, c1, third = (parse_rational(p) for p in parts)
    if r.denominator != 1 or c1.denominator != 1:
        raise ValueError(f"rank and c1 must be integers in {text!r}")
    if r == 0:
        if third.denominator != 1:
            raise ValueError("torsion Euler characteristic must be an integer")
        return ChernCharacter.torsion(int(c1), int(third))
    v = ChernCharacter(int(r), int(c1), third)
    if integral and not v.is_integral():
        raise ValueError(f"character {text!r} is not integral (c2 = {v.c2})")
    return v
