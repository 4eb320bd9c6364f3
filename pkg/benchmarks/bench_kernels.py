"""Benchmark the numba and numpy kernel backends on the S_6 cost table.

Usage: python benchmarks/bench_kernels.py [n]
"""

import sys
import time

import numpy as np

from rankmod import _kernels
from rankmod.perms import all_permutations


def timeit(fn, *args, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    pos = _kernels.positions_array(all_permutations(n))
    m = pos.shape[0]
    print(f"n={n}: {m} states, {m * m} ordered pairs")

    backends = [("numpy", _kernels._cost_rows_numpy, _kernels._min_cost_to_set_numpy)]
    try:
        import numba as nb

        backends.append(
            (
                "numba",
                nb.njit(cache=True)(_kernels._cost_rows_loops),
                nb.njit(cache=True)(_kernels._min_cost_to_set_loops),
            )
        )
    except ImportError:
        print("numba not available; numpy only")

    results = {}
    for name, cost_rows, min_cost in backends:
        cost_rows(pos[:8], pos[:8])  # warm up / compile
        min_cost(pos[:8], pos[:8])
        t_table, table = timeit(cost_rows, pos, pos)
        t_min, mins = timeit(min_cost, pos, pos[:10])
        results[name] = (t_table, t_min, table, mins)
        print(f"{name:>6}: cost table {t_table * 1e3:8.1f} ms   "
              f"min-cost-to-set {t_min * 1e3:8.1f} ms")

    if len(results) == 2:
        a, b = results["numpy"], results["numba"]
        assert (a[2] == b[2]).all() and (a[3] == b[3]).all(), "backends disagree"
        print(f"speedup: cost table x{a[0] / b[0]:.1f}, min-cost x{a[1] / b[1]:.1f}")


if __name__ == "__main__":
    main()
