"""Independent checks: finite-field Kronecker hom dimensions and a brute-force DLP supremum."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ._kernels import rank_mod_p
from .arith import as_fraction
from .chern import hilbert_p
from .exceptional import exceptional_from_index
from .kronecker import KroneckerShape

__all__ = [
    "OracleConfig",
    "OracleConfigError",
    "kronecker_hom_oracle",
    "hom_system",
    "delta_brute_force",
]

DEFAULT_PRIME = 32003
_MAX_PRIME = 2**31


class OracleConfigError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % k for k in range(3, math.isqrt(n) + 1, 2))


@dataclass(frozen=True)
class OracleConfig:
    prime: int = DEFAULT_PRIME
    trials: int = 5
    seed: int = 0

    def validate(self, max_entry: int = 0) -> None:
        if not _is_prime(self.prime) or self.prime >= _MAX_PRIME:
            raise OracleConfigError(f"prime must be a prime below 2^31, got {self.prime}")
        if self.prime <= 2 * max_entry:
            raise OracleConfigError(
                f"prime {self.prime} too small for dimension entries up to {max_entry}"
            )
        if self.trials < 1:
            raise OracleConfigError("trials must be positive")
        if not 0 <= self.seed < 2**64:
            raise OracleConfigError("seed must be a 64-bit unsigned integer")


def hom_system(f_maps: np.ndarray, e_maps: np.ndarray) -> np.ndarray:
    """Matrix of ``(beta, alpha) -> (e_k beta - alpha f_k)_k``.

    ``f_maps`` has shape ``(N, a', b')`` and ``e_maps`` shape ``(N, a, b)``;
    unknowns are ``beta`` (``b x b'``) then ``alpha`` (``a x a'``), row-major.
    """
    n, ap, bp = f_maps.shape
    _, a, b = e_maps.shape
    blocks = []
    for k in range(n):
        left = np.kron(e_maps[k], np.eye(bp, dtype=np.int64))
        right = -np.kron(np.eye(a, dtype=np.int64), f_maps[k].T)
        blocks.append(np.hstack([left, right]))
    return np.vstack(blocks)


def kronecker_hom_oracle(
    f: KroneckerShape, e: KroneckerShape, cfg: OracleConfig = OracleConfig()
) -> int:
    """Generic ``hom(f, e)`` estimated by random modules over ``GF(p)``."""
    if f.n != e.n:
        raise ValueError(f"arrow counts differ: {f.n} vs {e.n}")
    cfg.validate(max(f.b, f.a, e.b, e.a))
    n, p = f.n, cfg.prime
    cols = e.b * f.b + e.a * f.a
    rows = n * e.a * f.b
    if rows == 0:
        return cols
    floor = max(cols - rows, 0)
    best = cols
    for child in np.random.SeedSequence(cfg.seed).spawn(cfg.trials):
        rng = np.random.default_rng(child)
        f_maps = rng.integers(0, p, size=(n, f.a, f.b), dtype=np.int64)
        e_maps = rng.integers(0, p, size=(n, e.a, e.b), dtype=np.int64)
        best = min(best, cols - rank_mod_p(hom_system(f_maps, e_maps), p))
        if best == floor:
            # no later trial can do better than full rank
            break
    return best


@lru_cache(maxsize=None)
def _unit_table(max_order: int):
    """Exceptional slopes with index in ``[0, 1)`` and order ``<= max_order``."""
    den = 2**max_order
    slopes = [exceptional_from_index(Fraction(k, den)) for k in range(den)]
    mus = np.array([float(s.mu) for s in slopes])
    discs = np.array([float(s.disc) for s in slopes])
    return slopes, mus, discs


def delta_brute_force(mu, max_order: int) -> Fraction:
    """``max P(-|mu - alpha|) - Delta_alpha`` over slopes of order ``<= max_order`` within 3 of ``mu``.

    A float pass shortlists near-maximal candidates; the maximum itself is
    taken exactly.
    """
    if max_order < 0:
        raise ValueError("max_order must be nonnegative")
    mu = as_fraction(mu)
    slopes, mus, discs = _unit_table(max_order)
    base = math.floor(mu)
    shifts = np.arange(-3, 4)
    all_mu = (mus[None, :] + (base + shifts)[:, None]).ravel()
    all_disc = np.tile(discs, len(shifts))
    dist = np.abs(float(mu) - all_mu)
    x = -dist
    vals = x * x / 2 + 1.5 * x + 1 - all_disc
    vals[dist >= 3 + 1e-9] = -np.inf
    top = vals.max()
    cand = np.nonzero(vals >= top - 1e-9 * max(1.0, abs(top)))[0]
    best = None
    width = len(slopes)
    for idx in cand:
        shift, k = divmod(int(idx), width)
        s = slopes[k]
        alpha = s.mu + base + int(shifts[shift])
        d = abs(mu - alpha)
        if d >= 3:
            continue
        val = hilbert_p(-d) - s.disc
        if best is None or val > best:
            best = val
    assert best is not None
    return best
