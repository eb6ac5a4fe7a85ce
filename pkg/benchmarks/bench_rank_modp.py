"""Compare the compiled and pure-numpy rank kernels on oracle-sized systems.

Usage: python benchmarks/bench_rank_modp.py [--repeat 50] [--prime 32003]
"""

import argparse
import time

import numpy as np

from p2tensor._kernels import rank_mod_p_numba, rank_mod_p_numpy

SHAPES = [(24, 16), (64, 32), (144, 72), (320, 128)]


def bench(fn, mats, p, repeat):
    start = time.perf_counter()
    for _ in range(repeat):
        ranks = [fn(m, p) for m in mats]
    return (time.perf_counter() - start) / (repeat * len(mats)), ranks


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--prime", type=int, default=32003)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    rank_mod_p_numba(np.eye(2, dtype=np.int64), args.prime)  # compile outside the timing
    print(f"{'shape':>10} {'numpy us':>10} {'numba us':>10} {'speedup':>8}")
    for rows, cols in SHAPES:
        mats = [rng.integers(0, args.prime, size=(rows, cols)) for _ in range(8)]
        # force rank deficiency on half of them
        for m in mats[::2]:
            m[:, -1] = m[:, 0]
        t_np, r_np = bench(rank_mod_p_numpy, mats, args.prime, args.repeat)
        t_nb, r_nb = bench(rank_mod_p_numba, mats, args.prime, args.repeat)
        assert r_np == r_nb
        print(f"{rows:>4}x{cols:<5} {t_np * 1e6:>10.1f} {t_nb * 1e6:>10.1f} {t_np / t_nb:>8.1f}")


if __name__ == "__main__":
    main()
