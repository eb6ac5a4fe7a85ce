"""Corresponding exceptional slopes of a character and the data built from them."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from .arith import QuadraticNumber, solve_monic_quadratic
from .chern import ChernCharacter, chi, chi_tensor, dual, primitive_integral, serre_dual
from .exceptional import (
    DEFAULT_MAX_ORDER,
    DepthExceeded,
    ExceptionalSlope,
    decompose,
    exc_pair_cohomology,
    exceptional_from_index,
    exists_positive_dimensional_moduli,
    locate,
)
from .kronecker import KroneckerShape

__all__ = [
    "SignCase",
    "ResolutionData",
    "OrthogonalPair",
    "NotStableError",
    "corresponding_exceptionals",
    "resolution",
    "orthogonal_characters",
    "orthogonal_intersection",
    "kronecker_fibration_shape",
    "midpoint",
    "check_positive_dimensional",
]


class NotStableError(ValueError):
    """The character has no positive-dimensional moduli of stable sheaves."""


class SignCase(enum.Enum):
    POSITIVE_CHI = "PositiveChi"
    NONPOSITIVE_CHI = "NonpositiveChi"


@dataclass(frozen=True)
class ResolutionData:
    sign_case: SignCase
    nu_plus: ExceptionalSlope
    alpha: ExceptionalSlope
    beta: ExceptionalSlope
    m1: int
    m2: int
    m3: int
    k_char: ChernCharacter
    kronecker_shape: KroneckerShape


@dataclass(frozen=True)
class OrthogonalPair:
    u_plus: ChernCharacter
    u_minus: ChernCharacter


def midpoint(s: ExceptionalSlope, t: ExceptionalSlope) -> ExceptionalSlope:
    """The slope with dyadic index halfway between ``s`` and ``t`` (equals ``s.t`` for neighbours)."""
    return exceptional_from_index((s.index + t.index) / 2)


def check_positive_dimensional(v: ChernCharacter, max_order: int = DEFAULT_MAX_ORDER) -> None:
    if v.is_torsion:
        return
    if v.r <= 0:
        raise ValueError(f"character {v} must have positive rank or be torsion")
    if not v.is_integral():
        raise ValueError(f"character {v} is not integral")
    if not exists_positive_dimensional_moduli(v, max_order):
        raise NotStableError(f"{v} has no positive-dimensional moduli space")


def _pick(root: QuadraticNumber, max_order: int) -> ExceptionalSlope:
    res = locate(root, max_order)
    if not res.found:
        raise DepthExceeded(f"could not place {root} within order {max_order}")
    # endpoint hits keep the slope whose interval boundary was hit
    return res.slope


@lru_cache(maxsize=16384)
def corresponding_exceptionals(
    v: ChernCharacter, max_order: int = DEFAULT_MAX_ORDER
) -> Tuple[ExceptionalSlope, Optional[ExceptionalSlope]]:
    """``(nu_plus, nu_minus)``; torsion classes have no secondary slope."""
    check_positive_dimensional(v, max_order)
    if v.is_torsion:
        return _pick(QuadraticNumber.coerce(Fraction(-chi(v), v.c1)), max_order), None
    m, d = v.mu, v.delta
    roots = solve_monic_quadratic(2 * m + 3, m * m + 3 * m + 1 - 2 * d)
    assert roots is not None
    lo, hi = roots
    nu_plus = _pick(hi, max_order)
    nu_minus = _pick(lo, max_order)
    assert nu_plus.mu - nu_minus.mu >= 3
    return nu_plus, nu_minus


@lru_cache(maxsize=16384)
def resolution(v: ChernCharacter, max_order: int = DEFAULT_MAX_ORDER) -> ResolutionData:
    nu, _ = corresponding_exceptionals(v, max_order)
    alpha, beta = decompose(nu)
    e_nu = chi_tensor(v, nu.character())
    if e_nu > 0:
        case = SignCase.POSITIVE_CHI
        m3 = int(e_nu)
        m1 = int(-chi_tensor(v, alpha.character()))
        m2 = int(-chi_tensor(v, midpoint(alpha, nu).character()))
        k = v - m3 * (-nu).character()
    else:
        case = SignCase.NONPOSITIVE_CHI
        m3 = int(-e_nu)
        m1 = int(chi_tensor(v, midpoint(nu, beta).character()))
        m2 = int(chi_tensor(v, beta.character()))
        k = v + m3 * (-nu).shift(-3).character()
    assert min(m1, m2, m3) >= 0, (v, m1, m2, m3)
    assert k == m2 * (-beta).character() - m1 * (-alpha).shift(-3).character()
    n = exc_pair_cohomology(alpha.shift(3), -beta)[0]
    assert n >= 3
    shape = KroneckerShape(n, m1, m2)
    return ResolutionData(case, nu, alpha, beta, m1, m2, m3, k, shape)


def kronecker_fibration_shape(v: ChernCharacter, max_order: int = DEFAULT_MAX_ORDER) -> KroneckerShape:
    return resolution(v, max_order).kronecker_shape


def _chi_form(x: ChernCharacter) -> Tuple[Fraction, Fraction, Fraction]:
    """Coefficients of ``u -> chi(x (x) u)`` on the basis ``r, c1, ch2``."""
    return (chi(x), x.c1 + Fraction(3, 2) * x.r, Fraction(x.r))


def orthogonal_intersection(v: ChernCharacter, other: ChernCharacter) -> ChernCharacter:
    """Minimal positive-rank integral ``u`` with ``chi(v (x) u) = chi(other (x) u) = 0``."""
    a, b = _chi_form(v), _chi_form(other)
    cross = (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )
    if cross[0] == 0:
        raise ValueError(f"orthogonal line of {v} and {other} has rank zero")
    if cross[0] < 0:
        cross = tuple(-t for t in cross)
    return primitive_integral(*cross)


@lru_cache(maxsize=16384)
def _primary_orthogonal(v: ChernCharacter, max_order: int) -> ChernCharacter:
    res = resolution(v, max_order)
    if res.sign_case is SignCase.POSITIVE_CHI:
        other = (-res.nu_plus).character()
    else:
        other = (-res.nu_plus).shift(-3).character()
    return orthogonal_intersection(v, other)


def orthogonal_characters(v: ChernCharacter, max_order: int = DEFAULT_MAX_ORDER) -> OrthogonalPair:
    """Primary and secondary corresponding orthogonal characters ``u+`` and ``u-``."""
    if v.is_torsion or v.r < 1:
        raise ValueError("orthogonal characters need positive rank")
    check_positive_dimensional(v, max_order)
    u_plus = _primary_orthogonal(v, max_order)
    u_minus = dual(_primary_orthogonal(serre_dual(v), max_order))
    if u_minus.r == 1:
        u_minus = 2 * u_minus
    return OrthogonalPair(u_plus, u_minus)
