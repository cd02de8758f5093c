"""Time the numba kernels against their numpy fallbacks on S_n data.

    python benchmarks/bench_kernels.py --n 8 --repeat 5
"""
import argparse
import time
from itertools import permutations
from math import factorial

import numpy as np

from hurwitzkp import _kernels as k
from hurwitzkp._accel import backend


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - start)
    return min(times), out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    n = args.n

    perms = np.array(list(permutations(range(n))), dtype=np.int64).reshape(factorial(n), n)
    # lex enumeration, so a permutation's rank is its row; one table per transposition (x y)
    tables = []
    for y in range(1, n):
        for x in range(y):
            swapped = perms.copy()
            swapped[:, [x, y]] = swapped[:, [y, x]]
            tables.append(k.rank_numpy(swapped))
    tables = np.array(tables, dtype=np.int64)
    vec = np.random.default_rng(0).integers(-5, 6, size=len(perms))
    left = np.random.default_rng(1).integers(0, 20, size=len(perms))
    right = np.random.default_rng(2).integers(0, 20, size=len(perms))

    cases = [
        ("rank", (perms,)),
        ("cycle_multiplicities", (perms,)),
        ("gather_sum", (vec, tables)),
        ("pair_counts", (left, right, 20)),
    ]
    print(f"backend={backend()} n={n} |S_n|={len(perms)} transpositions={len(tables)}")
    print(f"{'kernel':<22}{'numpy (ms)':>12}{'numba (ms)':>12}{'speedup':>10}")
    for name, inputs in cases:
        fast = getattr(k, f"{name}_numba")
        slow = getattr(k, f"{name}_numpy")
        fast(*inputs)  # compile outside the timed runs
        t_np, a = best_of(slow, inputs, args.repeat)
        t_nb, b = best_of(fast, inputs, args.repeat)
        assert np.array_equal(a, b), name
        print(f"{name:<22}{t_np * 1e3:>12.2f}{t_nb * 1e3:>12.2f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
