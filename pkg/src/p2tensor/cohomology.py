"""Generic cohomology of ``V (x) W`` for general stable sheaves on the plane.

The region of ``w`` relative to ``v`` yields a one-sided vanishing (or, in
region IIIb, explicit special values).  Stability gates then force ``h^0 = 0``
when ``mu(v (x) w) < 0`` and ``h^2 = 0`` when ``mu(v (x) w) > -3``; the Serre
dual pair ``(v^D, w^*)`` supplies the region data when ``h^2`` can be nonzero.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from .arith import compare
from .chern import (
    ChernCharacter,
    chi_tensor,
    dual,
    minimal_integral_on_parabola,
    serre_dual,
    SlopeDiscPoint,
)
from .correspondence import (
    ResolutionData,
    SignCase,
    _primary_orthogonal,
    check_positive_dimensional,
    corresponding_exceptionals,
    midpoint,
    orthogonal_characters,
    resolution,
)
from .exceptional import (
    DEFAULT_MAX_ORDER,
    ExceptionalSlope,
    delta,
    exc_pair_cohomology,
    exceptional_slope_of,
    is_exceptional_character,
)

__all__ = [
    "Region",
    "RegionError",
    "RegionInfo",
    "CohomologyReport",
    "GGVerdict",
    "twist_by_exceptional",
    "classify_region",
    "region_info",
    "generic_cohomology",
    "cohomologically_orthogonal",
    "sufficient_multiple",
    "lattice_exponent",
    "hom_globally_generated",
    "tensor_globally_generated",
    "region_map",
]


class Region(str, enum.Enum):
    I = "I"
    II = "II"
    IIIa = "IIIa"
    IIIb = "IIIb"
    IVa = "IVa"
    IVb = "IVb"
    IVc = "IVc"
    IVd = "IVd"
    Va = "Va"
    Vb = "Vb"
    Vc = "Vc"
    Vd = "Vd"
    EXCEPTIONAL = "ExceptionalPath"
    TORSION = "TorsionPath"

    def __str__(self) -> str:
        return self.value


_H1_ZERO = {Region.I, Region.II, Region.IIIa, Region.IVa, Region.Va}
_H0_ZERO = {Region.IVb, Region.IVc, Region.IVd, Region.Vb, Region.Vc, Region.Vd}
_NEEDS_DIVISIBILITY = {
    Region.IVa, Region.IVb, Region.IVc, Region.IVd,
    Region.Va, Region.Vb, Region.Vc, Region.Vd,
}


class RegionError(RuntimeError):
    """No region inequality matched; indicates a gap in the covering."""


class InconsistentCohomology(AssertionError):
    pass


@dataclass(frozen=True)
class CohomologyReport:
    h0: int
    h1: int
    h2: int
    chi: int
    region: Region
    special: bool
    requires_divisibility: bool
    sufficient_multiple: Optional[int] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def h(self) -> Tuple[int, int, int]:
        return (self.h0, self.h1, self.h2)

    def to_dict(self) -> Dict[str, object]:
        return {
            "h0": self.h0,
            "h1": self.h1,
            "h2": self.h2,
            "chi": self.chi,
            "region": self.region.value,
            "special": self.special,
            "requires_divisibility": self.requires_divisibility,
            "sufficient_multiple": self.sufficient_multiple,
            "notes": list(self.notes),
        }

    def validate(self, rank_one: bool = False) -> None:
        """Check the report invariants; ``rank_one`` admits the two-group ``H^2`` case."""
        if min(self.h) < 0:
            raise InconsistentCohomology(f"negative cohomology {self.h}")
        if self.h0 - self.h1 + self.h2 != self.chi:
            raise InconsistentCohomology(f"{self.h} does not sum to chi = {self.chi}")
        if self.h0 and self.h2:
            raise InconsistentCohomology("h0 and h2 cannot both be nonzero")
        if self.special != (sum(1 for x in self.h if x) >= 2):
            raise InconsistentCohomology("special flag disagrees with the values")
        if self.special and self.region is not Region.IIIb and not rank_one:
            raise InconsistentCohomology("special cohomology outside region IIIb")


def _report(
    h0, h1, h2, chi, region, divisible, multiple=None, notes=(), rank_one=False
) -> CohomologyReport:
    special = sum(1 for x in (h0, h1, h2) if x) >= 2
    rep = CohomologyReport(
        int(h0), int(h1), int(h2), int(chi), region, special, divisible, multiple, tuple(notes)
    )
    rep.validate(rank_one)
    return rep


def _int(x: Fraction) -> int:
    assert x.denominator == 1, x
    return int(x)


# exceptional inputs -------------------------------------------------------


def _exceptional_part(v: ChernCharacter, max_order: int) -> Optional[Tuple[ExceptionalSlope, int]]:
    """``(slope, multiplicity)`` when ``v`` is a multiple of an exceptional character."""
    if v.is_torsion or not is_exceptional_character(v, max_order):
        return None
    s = exceptional_slope_of(v.mu, max_order)
    return s, v.r // s.rank


def twist_by_exceptional(
    v: ChernCharacter, e: ExceptionalSlope, max_order: int = DEFAULT_MAX_ORDER
) -> CohomologyReport:
    """Cohomology of ``V (x) E_e`` for general stable ``V``; at most one group is nonzero."""
    exc = _exceptional_part(v, max_order)
    if exc is not None:
        s, mult = exc
        h = tuple(mult * x for x in exc_pair_cohomology(s, e))
        return _report(*h, h[0] - h[1] + h[2], Region.EXCEPTIONAL, False)
    check_positive_dimensional(v, max_order)
    chi = _int(chi_tensor(v, e.character()))
    if v.is_torsion:
        return _report(max(chi, 0), max(-chi, 0), 0, chi, Region.EXCEPTIONAL, False)
    mu = v.mu + e.mu
    if chi == 0:
        h = (0, 0, 0)
    elif chi < 0:
        h = (0, -chi, 0)
    elif mu >= 0:
        h = (chi, 0, 0)
    elif mu <= -3:
        h = (0, 0, chi)
    else:  # pragma: no cover - excluded by stability
        raise InconsistentCohomology(f"chi > 0 with slope {mu} in (-3, 0)")
    return _report(*h, chi, Region.EXCEPTIONAL, False)


# regions ------------------------------------------------------------------


@dataclass(frozen=True)
class RegionInfo:
    region: Region
    res: ResolutionData
    chi_w_nu: int  # chi(w (x) E_{-nu+})
    chi_k_w: int


def region_info(v: ChernCharacter, w: ChernCharacter, max_order: int = DEFAULT_MAX_ORDER) -> RegionInfo:
    check_positive_dimensional(v, max_order)
    if w.is_torsion or w.r <= 0:
        raise ValueError("w must have positive rank")
    check_positive_dimensional(w, max_order)
    res = resolution(v, max_order)
    nu, beta = res.nu_plus, res.beta
    nb = midpoint(nu, beta)
    omega = corresponding_exceptionals(w, max_order)[0].mu

    def x(s: ExceptionalSlope) -> int:
        return _int(chi_tensor(w, s.character()))

    c_b, c_nb, c_n = x(-beta), x(-nb), x(-nu)
    c_k = _int(chi_tensor(res.k_char, w))
    positive = res.sign_case is SignCase.POSITIVE_CHI

    def info(r: Region) -> RegionInfo:
        return RegionInfo(r, res, c_n, c_k)

    if omega <= (-beta).mu and c_b >= 0:
        return info(Region.I)
    if (-beta).mu <= omega <= (-nb).mu and c_b <= 0 and c_nb >= 0:
        return info(Region.II)
    in_three = (-nb).mu <= omega <= (-nu).mu and c_nb <= 0 and c_n >= 0
    if in_three and c_k >= 0:
        return info(Region.IIIa)
    if in_three and positive:
        return info(Region.IIIb)

    c_vw = _int(chi_tensor(v, w))
    mu_w = w.mu
    mu_u = _primary_orthogonal(v, max_order).mu
    if positive:
        if not (omega > (-nu).mu or (omega == (-nu).mu and c_n <= 0)):
            raise RegionError(f"{w} lies in no region for {v}")
        left_end = nu.left
        if c_vw >= 0 and c_n <= 0:
            return info(Region.IVa)
        if mu_w >= mu_u and c_vw <= 0:
            return info(Region.IVb)
        if compare(mu_w, left_end) > 0 and mu_w <= mu_u and c_n <= 0:
            return info(Region.IVc)
        if compare(mu_w, left_end) < 0:
            return info(Region.IVd)
        raise RegionError(f"{w} is in region IV for {v} but in no subregion")
    if c_vw >= 0 and (c_k <= 0 or c_n <= 0):
        return info(Region.Va)
    if mu_w >= mu_u and c_vw <= 0:
        return info(Region.Vb)
    if nu.mu <= mu_w <= mu_u:
        return info(Region.Vc)
    if mu_w <= nu.mu:
        return info(Region.Vd)
    raise RegionError(f"{w} lies in no region for {v}")


def classify_region(v: ChernCharacter, w: ChernCharacter, max_order: int = DEFAULT_MAX_ORDER) -> Region:
    """Region label of ``w`` relative to ``v``; exceptional inputs short-circuit."""
    if _exceptional_part(v, max_order) or _exceptional_part(w, max_order):
        return Region.EXCEPTIONAL
    return region_info(v, w, max_order).region


def _one_sided(info: RegionInfo, chi: int) -> Tuple[int, int]:
    """``(h0, h1)`` from a region, assuming the top group vanishes."""
    r = info.region
    if r in _H1_ZERO:
        return chi, 0
    if r in _H0_ZERO:
        return 0, -chi
    assert r is Region.IIIb
    return info.res.m3 * info.chi_w_nu, -info.chi_k_w


# engine -------------------------------------------------------------------


def generic_cohomology(
    v: ChernCharacter, w: ChernCharacter, max_order: int = DEFAULT_MAX_ORDER
) -> CohomologyReport:
    """``(h0, h1, h2)`` of ``V (x) W`` for general ``V`` and ``W``."""
    for x in (v, w):
        if not x.is_integral():
            raise ValueError(f"character {x} is not integral")
        if x.r < 0 or (x.r == 0 and not x.is_torsion):
            raise ValueError(f"unsupported character {x}")
    if v.is_torsion and w.is_torsion:
        raise ValueError("tensor of two torsion classes is not supported")
    if w.is_torsion or (w.r == 1 and v.r > 1):
        # torsion or rank-one factor goes first
        v, w = w, v
    chi = _int(chi_tensor(v, w))

    ev, ew = _exceptional_part(v, max_order), _exceptional_part(w, max_order)
    if ev and ew:
        h = exc_pair_cohomology(ev[0], ew[0])
        m = ev[1] * ew[1]
        return _report(m * h[0], m * h[1], m * h[2], chi, Region.EXCEPTIONAL, False)
    if ew:
        rep = twist_by_exceptional(v, ew[0], max_order)
        return _scaled(rep, ew[1])
    if ev:
        rep = twist_by_exceptional(w, ev[0], max_order)
        return _scaled(rep, ev[1])

    check_positive_dimensional(v, max_order)
    check_positive_dimensional(w, max_order)

    if v.is_torsion:
        info = region_info(v, w, max_order)
        return _report(
            max(chi, 0), max(-chi, 0), 0, chi, Region.TORSION, True,
            notes=(f"torsion region {info.region.value}",),
        )

    multiple = sufficient_multiple(v, w, max_order) if chi == 0 else None
    mu_t = v.mu + w.mu
    notes: List[str] = []
    primal = region_info(v, w, max_order)

    if v.r == 1 and mu_t <= -3:
        # H^2(I_Z(a) (x) W) = H^2(W(a))
        h2 = twist_by_exceptional(w, exceptional_slope_of(v.c1), max_order).h2
        notes.append("rank-one h2 taken from H^2(W(a)); may exceed the Euler characteristic bound")
        return _report(
            0, h2 - chi, h2, chi, primal.region,
            primal.region in _NEEDS_DIVISIBILITY, multiple, notes, rank_one=True,
        )

    if mu_t >= 0:
        h0, h1 = _one_sided(primal, chi)
        return _report(
            h0, h1, 0, chi, primal.region,
            primal.region in _NEEDS_DIVISIBILITY, multiple, notes,
        )
    if mu_t <= -3:
        dual_info = region_info(serre_dual(v), dual(w), max_order)
        h2, h1 = _one_sided(dual_info, chi)
        notes.append("decided by the Serre dual pair")
        return _report(
            0, h1, h2, chi, dual_info.region,
            dual_info.region in _NEEDS_DIVISIBILITY, multiple, notes,
        )
    if chi > 0:
        raise InconsistentCohomology(f"chi = {chi} > 0 with slope {mu_t} in (-3, 0)")
    notes.append("slope in (-3, 0) forces h0 = h2 = 0")
    return _report(0, -chi, 0, chi, primal.region, False, multiple, notes)


def _scaled(rep: CohomologyReport, m: int) -> CohomologyReport:
    return _report(m * rep.h0, m * rep.h1, m * rep.h2, m * rep.chi, rep.region, False)


# orthogonality and divisibility ---------------------------------------------


def _lattice_coords(x: ChernCharacter) -> Tuple[int, int, int]:
    """Integral coordinates ``(r, c1, ch2 - c1/2)``."""
    t = x.ch2 - Fraction(x.c1, 2)
    assert t.denominator == 1
    return (x.r, x.c1, int(t))


def _kernel_basis(row: List[int]) -> Tuple[List[int], List[int]]:
    """Basis of the integer kernel of a nonzero integer row of length 3."""
    a = list(row)
    cols = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    while sum(1 for t in a if t) > 1:
        i = min((j for j in range(3) if a[j]), key=lambda j: abs(a[j]))
        for j in range(3):
            if j != i and a[j]:
                q = a[j] // a[i]
                a[j] -= q * a[i]
                cols[j] = [cj - q * ci for cj, ci in zip(cols[j], cols[i])]
    p = next(j for j in range(3) if a[j])
    b1, b2 = (cols[j] for j in range(3) if j != p)
    return b1, b2


def _solve2(b1, b2, y) -> Tuple[Fraction, Fraction]:
    """Coefficients of ``y`` in the basis ``(b1, b2)`` of a rank-2 sublattice."""
    for i in range(3):
        for j in range(i + 1, 3):
            det = b1[i] * b2[j] - b1[j] * b2[i]
            if det:
                x1 = Fraction(y[i] * b2[j] - y[j] * b2[i], det)
                x2 = Fraction(b1[i] * y[j] - b1[j] * y[i], det)
                assert all(x1 * p + x2 * q == t for p, q, t in zip(b1, b2, y))
                return x1, x2
    raise ValueError("degenerate basis")


def _orthogonal_lattice(v: ChernCharacter, max_order: int):
    if v.is_torsion or v.r <= 0:
        raise ValueError("positive rank character required")
    row = [_int(v.euler_chi), v.c1 + 2 * v.r, v.r]
    b1, b2 = _kernel_basis(row)
    pair = orthogonal_characters(v, max_order)
    up = _solve2(b1, b2, _lattice_coords(pair.u_plus))
    um = _solve2(b1, b2, _lattice_coords(pair.u_minus))
    m = [[int(up[0]), int(um[0])], [int(up[1]), int(um[1])]]
    return b1, b2, m


def lattice_exponent(v: ChernCharacter, max_order: int = DEFAULT_MAX_ORDER) -> int:
    """Exponent of ``(v^perp cap lattice) / (Z u+ + Z u-)``."""
    _, _, m = _orthogonal_lattice(v, max_order)
    det = abs(m[0][0] * m[1][1] - m[0][1] * m[1][0])
    g = math.gcd(*(abs(t) for row in m for t in row))
    return det // g


def sufficient_multiple(v: ChernCharacter, w: ChernCharacter, max_order: int = DEFAULT_MAX_ORDER) -> int:
    """Least ``m > 0`` with ``m w`` in ``Z u+ + Z u-``."""
    if chi_tensor(v, w) != 0:
        raise ValueError("sufficient multiple needs chi(v (x) w) = 0")
    b1, b2, m = _orthogonal_lattice(v, max_order)
    c1, c2 = _solve2(b1, b2, _lattice_coords(w))
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    x1 = Fraction(m[1][1] * int(c1) - m[0][1] * int(c2), det)
    x2 = Fraction(m[0][0] * int(c2) - m[1][0] * int(c1), det)
    return math.lcm(x1.denominator, x2.denominator)


def cohomologically_orthogonal(v: ChernCharacter, w: ChernCharacter, max_order: int = DEFAULT_MAX_ORDER) -> bool:
    """Whether general ``V (x) W`` has no cohomology, for ``chi(v (x) w) = 0``."""
    if chi_tensor(v, w) != 0:
        raise ValueError("cohomological orthogonality needs chi(v (x) w) = 0")
    pair = orthogonal_characters(v, max_order)
    return w.mu >= pair.u_plus.mu or w.mu <= pair.u_minus.mu


# global generation ---------------------------------------------------------


class GGVerdict(str, enum.Enum):
    GUARANTEED = "guaranteed"
    NOT_IMPLIED = "not-implied"


def _check_gg_input(x: ChernCharacter, max_order: int) -> None:
    if x.is_torsion or x.r <= 0:
        raise ValueError("global generation criteria need positive rank")
    if is_exceptional_character(x, max_order):
        raise ValueError(f"{x} is exceptional; use the exceptional-pair criteria")
    check_positive_dimensional(x, max_order)
    if x.delta <= Fraction(1, 2):
        raise ValueError("discriminant must exceed 1/2")


def hom_globally_generated(v: ChernCharacter, w: ChernCharacter, max_order: int = DEFAULT_MAX_ORDER) -> GGVerdict:
    """Sufficient test ``nu+(v) - omega-(w) <= 2`` for ``Hom(W, V)``."""
    _check_gg_input(v, max_order)
    _check_gg_input(w, max_order)
    nu = corresponding_exceptionals(v, max_order)[0].mu
    om = corresponding_exceptionals(w, max_order)[1].mu
    return GGVerdict.GUARANTEED if nu - om <= 2 else GGVerdict.NOT_IMPLIED


def tensor_globally_generated(v: ChernCharacter, w: ChernCharacter, max_order: int = DEFAULT_MAX_ORDER) -> GGVerdict:
    """Sufficient test ``nu+(v) + omega+(w) <= -1`` for ``V (x) W``."""
    _check_gg_input(v, max_order)
    _check_gg_input(w, max_order)
    nu = corresponding_exceptionals(v, max_order)[0].mu
    om = corresponding_exceptionals(w, max_order)[0].mu
    return GGVerdict.GUARANTEED if nu + om <= -1 else GGVerdict.NOT_IMPLIED


# grid data ------------------------------------------------------------------


def region_map(
    v: ChernCharacter,
    mu_min: Fraction,
    mu_max: Fraction,
    delta_min: Fraction,
    delta_max: Fraction,
    denominator: int,
    max_order: int = DEFAULT_MAX_ORDER,
) -> Iterator[Tuple[Fraction, Fraction, str]]:
    """Region labels on the grid ``(1/denominator) Z^2`` inside the given box.

    Points below the stability curve are labelled ``unstable``; each point is
    represented by its minimal-rank integral character.
    """
    if denominator < 1:
        raise ValueError("denominator must be positive")
    step = Fraction(1, denominator)
    mu = Fraction(math.ceil(mu_min * denominator), denominator)
    while mu <= mu_max:
        d = Fraction(math.ceil(delta_min * denominator), denominator)
        while d <= delta_max:
            w = minimal_integral_on_parabola(SlopeDiscPoint(mu, d))
            if _exceptional_part(w, max_order):
                label = Region.EXCEPTIONAL.value
            elif d < delta(mu, max_order):
                label = "unstable"
            else:
                label = region_info(v, w, max_order).region.value
            yield mu, d, label
            d += step
        mu += step
