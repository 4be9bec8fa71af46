"""Compare the numba-compiled kernels with their interpreted fallback.

    python benchmarks/bench_kernels.py [--sizes 6 10 14 18 22] [--repeat 3]

Frameworks are random with attack probability 0.25 (fixed seed) plus a
disjoint union of 2-cycles, whose 3^k complete labellings stress the
enumerator. Compilation happens before timing starts.
"""
import argparse
import time

import numpy as np

from arglab import USING_NUMBA, kernels
from arglab._accel import interpreted
from arglab.framework import ArgumentationFramework


def random_af(rng, n, p):
    names = [f"a{i}" for i in range(n)]
    hits = rng.random((n, n)) < p
    return ArgumentationFramework.from_edges(
        names, [(names[i], names[j]) for i in range(n) for j in range(n) if hits[i, j]]
    )


def even_cycles(k):
    names = [f"x{i}" for i in range(2 * k)]
    attacks = []
    for i in range(k):
        attacks += [(names[2 * i], names[2 * i + 1]), (names[2 * i + 1], names[2 * i])]
    return ArgumentationFramework.from_edges(names, attacks)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench(af, mode, repeat):
    att_ptr, att_idx, tgt_ptr, tgt_idx = af.csr
    args = (len(af), att_ptr, att_idx, tgt_ptr, tgt_idx, mode)
    rows = kernels.enumerate_kernel(*args)
    fast = best_of(lambda: kernels.enumerate_kernel(*args), repeat)
    slow = best_of(lambda: interpreted(kernels.enumerate_kernel)(*args), repeat)
    return len(rows), fast, slow


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[6, 10, 14, 18, 22])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if not USING_NUMBA:
        print("numba disabled; both columns time the interpreted path")
    rng = np.random.default_rng(args.seed)
    print(f"{'framework':<22}{'mode':<11}{'rows':>8}{'numba s':>12}{'python s':>12}{'speedup':>9}")
    cases = [(f"random n={n}", random_af(rng, n, 0.25)) for n in args.sizes]
    cases += [(f"2-cycles k={k}", even_cycles(k)) for k in (4, 6, 8)]
    for name, af in cases:
        for mode, mode_name in ((kernels.MODE_ADMISSIBLE, "admissible"), (kernels.MODE_COMPLETE, "complete")):
            count, fast, slow = bench(af, mode, args.repeat)
            print(f"{name:<22}{mode_name:<11}{count:>8}{fast:>12.6f}{slow:>12.6f}{slow / fast:>8.1f}x")


if __name__ == "__main__":
    main()
