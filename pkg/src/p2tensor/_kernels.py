"""Rank of an integer matrix over a prime field.

The compiled kernel is used when numba is importable and the environment
variable ``P2TENSOR_DISABLE_NUMBA`` is unset or ``0``; otherwise a vectorised
numpy elimination with identical results is used.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = ["rank_mod_p", "rank_mod_p_numpy", "rank_mod_p_numba", "NUMBA_ENABLED"]


def _inverse_mod(x: int, p: int) -> int:
    return pow(int(x), p - 2, p)


def rank_mod_p_numpy(mat: np.ndarray, p: int) -> int:
    m = np.array(mat, dtype=np.int64) % p
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(m[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        m[rank] = (m[rank] * _inverse_mod(m[rank, c], p)) % p
        below = m[rank + 1 :, c].copy()
        if below.any():
            m[rank + 1 :] = (m[rank + 1 :] - np.outer(below, m[rank])) % p
        rank += 1
    return rank


try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None


if njit is not None:

    @njit(cache=True)
    def _rank_kernel(m, p):
        rows, cols = m.shape
        rank = 0
        for c in range(cols):
            if rank == rows:
                break
            piv = -1
            for i in range(rank, rows):
                if m[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(c, cols):
                    t = m[rank, j]
                    m[rank, j] = m[piv, j]
                    m[piv, j] = t
            # Fermat inverse of the pivot
            inv = 1
            base = m[rank, c]
            e = p - 2
            while e > 0:
                if e & 1:
                    inv = inv * base % p
                base = base * base % p
                e >>= 1
            for j in range(c, cols):
                m[rank, j] = m[rank, j] * inv % p
            for i in range(rank + 1, rows):
                f = m[i, c]
                if f != 0:
                    for j in range(c, cols):
                        m[i, j] = (m[i, j] - f * m[rank, j]) % p
            rank += 1
        return rank

    def rank_mod_p_numba(mat: np.ndarray, p: int) -> int:
        m = np.ascontiguousarray(np.asarray(mat, dtype=np.int64) % p)
        return int(_rank_kernel(m, np.int64(p)))

else:  # pragma: no cover
    rank_mod_p_numba = None


NUMBA_ENABLED = rank_mod_p_numba is not None and os.environ.get(
    "P2TENSOR_DISABLE_NUMBA", "0"
) in ("", "0")


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    """Rank of ``mat`` over ``GF(p)``; ``p`` must be prime and below ``2**31``."""
    if mat.shape[0] == 0 or mat.shape[1] == 0:
        return 0
    if NUMBA_ENABLED:
        return rank_mod_p_numba(mat, p)
    return rank_mod_p_numpy(mat, p)
