"""Kronecker quiver modules: Euler form, exceptional vectors, general decomposition."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from .arith import QuadraticNumber, compare

__all__ = [
    "KroneckerShape",
    "GeneralDecomposition",
    "parse_shape",
    "euler_form",
    "psi",
    "exceptional_orbit",
    "is_exceptional_vector",
    "expected_dimension",
    "semistable_exists",
    "decompose_general",
    "general_hom_ext",
]


@dataclass(frozen=True, order=True)
class KroneckerShape:
    n: int
    b: int
    a: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("Kronecker shapes need N >= 3 arrows")
        if self.b < 0 or self.a < 0 or (self.b == 0 and self.a == 0):
            raise ValueError(f"invalid dimension vector ({self.b},{self.a})")

    @property
    def vector(self) -> Tuple[int, int]:
        return (self.b, self.a)

    def primitive(self) -> Tuple["KroneckerShape", int]:
        g = math.gcd(self.b, self.a)
        return KroneckerShape(self.n, self.b // g, self.a // g), g

    def __str__(self) -> str:
        return f"{self.n}:{self.b},{self.a}"


@dataclass(frozen=True)
class GeneralDecomposition:
    summands: Tuple[Tuple[KroneckerShape, int], ...]

    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return {s.vector: m for s, m in self.summands}

    def total(self) -> Tuple[int, int]:
        return (
            sum(s.b * m for s, m in self.summands),
            sum(s.a * m for s, m in self.summands),
        )


def parse_shape(text: str) -> KroneckerShape:
    """Parse ``"N:b,a"``."""
    try:
        n, rest = text.strip().split(":")
        b, a = rest.split(",")
        return KroneckerShape(int(n), int(b), int(a))
    except ValueError as exc:
        raise ValueError(f"bad Kronecker shape {text!r}: expected 'N:b,a'") from exc


def _check_same_n(f: KroneckerShape, e: KroneckerShape) -> int:
    if f.n != e.n:
        raise ValueError(f"arrow counts differ: {f.n} vs {e.n}")
    return f.n


def euler_form(f: KroneckerShape, e: KroneckerShape) -> int:
    """``chi(f, e) = b'b + a'a - N b'a`` for ``f = (b', a')`` and ``e = (b, a)``."""
    n = _check_same_n(f, e)
    return f.b * e.b + f.a * e.a - n * f.b * e.a


def psi(n: int) -> QuadraticNumber:
    """Larger root ``(N + sqrt(N^2 - 4)) / 2`` of ``x^2 - N x + 1``."""
    return QuadraticNumber(Fraction(n, 2), Fraction(1, 2), n * n - 4)


def _tau_orbit(n: int) -> Iterator[Tuple[int, int]]:
    b, a = 0, 1
    while True:
        yield b, a
        b, a = a, n * a - b


def exceptional_orbit(n: int, count: int) -> List[KroneckerShape]:
    """First ``count`` vectors of the orbit of ``(0, 1)`` under ``tau(b, a) = (a, Na - b)``."""
    if n < 3 or count < 1:
        raise ValueError("need N >= 3 and count >= 1")
    out = []
    for (b, a), _ in zip(_tau_orbit(n), range(count)):
        out.append(KroneckerShape(n, b, a))
    return out


def _quad_form(n: int, b: int, a: int) -> int:
    return b * b + a * a - n * b * a


def is_exceptional_vector(s: KroneckerShape) -> bool:
    return _quad_form(s.n, s.b, s.a) == 1


def expected_dimension(s: KroneckerShape) -> int:
    return 1 - _quad_form(s.n, s.b, s.a)


def semistable_exists(s: KroneckerShape) -> bool:
    """Expected dimension test ``1 - b^2 - a^2 + N b a >= 0``.

    This covers both the exceptional vectors and slopes strictly inside
    ``(1/psi_N, psi_N)``; proper multiples of exceptional vectors fail and are
    only polystable.
    """
    return expected_dimension(s) >= 0


def _slope_cmp(b1: int, a1: int, b2: int, a2: int) -> int:
    """Compare ``b1/a1`` with ``b2/a2`` where ``a = 0`` means infinity."""
    lhs, rhs = b1 * a2, b2 * a1
    return (lhs > rhs) - (lhs < rhs)


def _bracket(n: int, b: int, a: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Adjacent exceptional vectors whose slopes bracket ``b/a`` (outside the stable range)."""
    lower_side = compare(b, psi(n) * a) < 0  # b/a < psi
    prev = None
    for vb, va in _tau_orbit(n):
        vec = (vb, va) if lower_side else (va, vb)
        if prev is not None:
            c = _slope_cmp(b, a, *vec)
            if (lower_side and c <= 0) or (not lower_side and c >= 0):
                return prev, vec
        prev = vec
    raise AssertionError("unreachable")  # pragma: no cover


def decompose_general(s: KroneckerShape) -> GeneralDecomposition:
    """Canonical decomposition of a general module of shape ``s``."""
    prim, g = s.primitive()
    if semistable_exists(prim):
        if is_exceptional_vector(prim):
            return GeneralDecomposition(((prim, g),))
        return GeneralDecomposition(((s, 1),))
    (b1, a1), (b2, a2) = _bracket(s.n, s.b, s.a)
    det = b1 * a2 - b2 * a1
    assert abs(det) == 1
    m1 = (s.b * a2 - b2 * s.a) // det
    m2 = (b1 * s.a - s.b * a1) // det
    assert m1 >= 0 and m2 >= 0
    parts = []
    if m1:
        parts.append((KroneckerShape(s.n, b1, a1), m1))
    if m2:
        parts.append((KroneckerShape(s.n, b2, a2), m2))
    return GeneralDecomposition(tuple(parts))


def general_hom_ext(f: KroneckerShape, e: KroneckerShape) -> Tuple[int, int]:
    """Generic ``(hom, ext^1)`` between general modules of shapes ``f`` and ``e``."""
    _check_same_n(f, e)
    if semistable_exists(f.primitive()[0]) or semistable_exists(e.primitive()[0]):
        chi = euler_form(f, e)
        return max(chi, 0), max(-chi, 0)
    hom = ext = 0
    for fs, fm in decompose_general(f).summands:
        for es, em in decompose_general(e).summands:
            chi = euler_form(fs, es)
            hom += fm * em * max(chi, 0)
            ext += fm * em * max(-chi, 0)
    assert hom - ext == euler_form(f, e)
    return hom, ext
