"""Exact rationals and real quadratic irrationals.

Rationals are plain :class:`fractions.Fraction` values.  A
:class:`QuadraticNumber` is ``a + b*sqrt(d)`` with rational ``a, b`` and a
nonnegative integer radicand ``d``; comparisons between numbers with
different radicands are decided exactly by squaring with sign tracking.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Optional, Tuple, Union

__all__ = [
    "QuadraticNumber",
    "as_fraction",
    "parse_rational",
    "format_rational",
    "compare",
    "solve_monic_quadratic",
]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, QuadraticNumber) and x.is_rational():
        return x.a
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; floats are rejected on purpose."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not an exact rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _normalize_radicand(b: Fraction, d: Fraction) -> Tuple[Fraction, int]:
    """Rewrite ``b*sqrt(d)`` as ``b'*sqrt(d')`` with ``d'`` a nonnegative integer.

    Only small square factors are extracted; full square-free reduction would
    need factoring, and equality never depends on it.
    """
    if d < 0:
        raise ValueError("negative radicand")
    # sqrt(p/q) = sqrt(p*q)/q
    n = d.numerator * d.denominator
    b = b / d.denominator
    if n == 0 or b == 0:
        return Fraction(0), 0
    s = math.isqrt(n)
    if s * s == n:
        return b * s, 1
    for p in _SMALL_PRIMES:
        pp = p * p
        while n % pp == 0:
            n //= pp
            b *= p
    return b, n


class QuadraticNumber:
    """The real number ``a + b*sqrt(d)``.

    Equality and ordering are mathematical, so ``QuadraticNumber(0, 1, 8)``
    equals ``QuadraticNumber(0, 2, 2)``.  Arithmetic is closed only within a
    single radicand (rationals mix with anything).
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=0):
        a = as_fraction(a)
        b, d = _normalize_radicand(as_fraction(b), as_fraction(d))
        if d == 1:
            a, b, d = a + b, Fraction(0), 0
        if b == 0:
            d = 0
        self.a: Fraction = a
        self.b: Fraction = b
        self.d: int = d

    @classmethod
    def coerce(cls, x) -> "QuadraticNumber":
        if isinstance(x, QuadraticNumber):
            return x
        return cls(as_fraction(x))

    @classmethod
    def sqrt(cls, d) -> "QuadraticNumber":
        return cls(0, 1, d)

    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.a

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def sign(self) -> int:
        """Exact sign of ``a + b*sqrt(d)``."""
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0 or sa == sb:
            return sa if sa != 0 else sb
        if sa == 0:
            return sb
        # opposite signs: the larger magnitude wins
        diff = self.a * self.a - self.b * self.b * self.d
        return sa * _sign(diff)

    def _common(self, other) -> Tuple["QuadraticNumber", int]:
        other = QuadraticNumber.coerce(other)
        if self.d and other.d and self.d != other.d:
            raise ValueError(
                f"arithmetic across radicands sqrt({self.d}) and sqrt({other.d}) is unsupported"
            )
        return other, self.d or other.d

    def __add__(self, other):
        try:
            o, d = self._common(other)
        except TypeError:
            return NotImplemented
        return QuadraticNumber(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        try:
            o, d = self._common(other)
        except TypeError:
            return NotImplemented
        return QuadraticNumber(self.a - o.a, self.b - o.b, d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o, d = self._common(other)
        except TypeError:
            return NotImplemented
        return QuadraticNumber(
            self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QuadraticNumber) and not other.is_rational():
            o, d = self._common(other)
            norm = o.a * o.a - o.b * o.b * d
            conj = QuadraticNumber(o.a / norm, -o.b / norm, d)
            return self * conj
        q = as_fraction(other)
        return QuadraticNumber(self.a / q, self.b / q, self.d)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __eq__(self, other):
        try:
            return compare(self, other) == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    # hashing would need a canonical square-free radicand
    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"QuadraticNumber({self})"

    def __str__(self) -> str:
        if self.is_rational():
            return format_rational(self.a)
        return f"({format_rational(self.a)})+({format_rational(self.b)})*sqrt({self.d})"


Number = Union[int, Fraction, QuadraticNumber]


def _sign_of_sum(x: Fraction, y: Fraction, d: int, z: Fraction, f: int) -> int:
    """Exact sign of ``x + y*sqrt(d) + z*sqrt(f)``."""
    p = QuadraticNumber(x, y, d)
    sp = p.sign()
    sq = _sign(z) if f else 0
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq if sp == 0 else sp
    # |p| vs |z|sqrt(f): compare p^2 = x^2 + y^2 d + 2xy sqrt(d) with z^2 f
    p2_minus_q2 = QuadraticNumber(x * x + y * y * d - z * z * f, 2 * x * y, d)
    s = p2_minus_q2.sign()
    if s == 0:
        return 0
    return sp if s > 0 else sq


def compare(x, y) -> int:
    """Return -1, 0 or 1 as ``x`` is less than, equal to or greater than ``y``."""
    x = QuadraticNumber.coerce(x)
    y = QuadraticNumber.coerce(y)
    if x.d == y.d or x.d == 0 or y.d == 0:
        return (x - y).sign()
    return _sign_of_sum(x.a - y.a, x.b, x.d, -y.b, y.d)


def solve_monic_quadratic(b, c) -> Optional[Tuple[QuadraticNumber, QuadraticNumber]]:
    """Roots of ``x^2 + b x + c``, smaller first, or ``None`` if none are real."""
    b = as_fraction(b)
    c = as_fraction(c)
    disc = b * b - 4 * c
    if disc < 0:
        return None
    lo = QuadraticNumber(-b / 2, Fraction(-1, 2), disc)
    hi = QuadraticNumber(-b / 2, Fraction(1, 2), disc)
    return lo, hi
