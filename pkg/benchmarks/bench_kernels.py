"""Benchmark the two kernel backends (numba vs pure numpy).

Covers the hot inner loops: packed boolean matrix multiplication, a full
oracle power, and the per-start BFS girth sweep.  Run with

    python benchmarks/bench_kernels.py [--n 512] [--reps 5]

The numba backend must be importable; the numpy path is always exercised
through the private fallback functions, so one process measures both.
"""

import argparse
import statistics
import time

import numpy as np

from skewwalk import _kernels, regime_instance
from skewwalk.oracle import BoolMatrix


def _time(fn, reps):
    samples = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return min(samples), statistics.median(samples)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=512)
    ap.add_argument("--k", type=int, default=8)
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--ell", type=int, default=10**12)
    args = ap.parse_args()

    if args.n < 64 * args.k:
        ap.error(f"--n must be at least 64*k = {64 * args.k}")

    print(f"active backend: {_kernels.backend_name()}")
    g = regime_instance(args.k, args.n, seed=7)
    print(f"instance: n={g.n}, m={g.edge_count}")

    a = BoolMatrix.from_graph(g)
    sq = a.multiply(a)  # also triggers JIT compilation before timing

    rows = []

    def numba_mm():
        _kernels.matmul_packed(a.packed, sq.packed, a.n)

    def numpy_mm():
        _kernels._matmul_packed_numpy(a.packed, sq.packed, a.n)

    if _kernels.NUMBA_ACTIVE:
        rows.append(("bool matmul", _time(numba_mm, args.reps), _time(numpy_mm, args.reps)))
    else:
        rows.append(("bool matmul", None, _time(numpy_mm, args.reps)))

    def numba_power():
        BoolMatrix.from_graph(g).power(args.ell)

    if _kernels.NUMBA_ACTIVE:
        pw_fast = _time(numba_power, max(1, args.reps // 2))
    else:
        pw_fast = None
    pw_slow = None
    if args.n <= 768:
        # numpy fallback for the same power, via the private entry point
        def numpy_power():
            packed = a.packed
            e = args.ell
            result = None
            base = packed
            while e > 0:
                if e & 1:
                    result = base if result is None else _kernels._matmul_packed_numpy(result, base, a.n)
                e >>= 1
                if e:
                    base = _kernels._matmul_packed_numpy(base, base, a.n)

        pw_slow = _time(numpy_power, max(1, args.reps // 2))
    rows.append((f"oracle power ell={args.ell:.0e}", pw_fast, pw_slow))

    indptr, indices = g.csr_out()

    def numba_girth():
        best = np.empty(g.n, dtype=np.int64)
        _kernels._girth_per_start_numba(indptr, indices, best)

    def numpy_girth():
        _kernels._girth_per_start_numpy(g.bool_adjacency())

    if _kernels.NUMBA_ACTIVE:
        rows.append(("girth sweep", _time(numba_girth, args.reps), _time(numpy_girth, args.reps)))
    else:
        rows.append(("girth sweep", None, _time(numpy_girth, args.reps)))

    print(f"\n{'kernel':<28}{'numba best':>12}{'numpy best':>12}{'speedup':>9}")
    for name, fast, slow in rows:
        fb = f"{fast[0]*1e3:10.2f}ms" if fast else "         -"
        sb = f"{slow[0]*1e3:10.2f}ms" if slow else "         -"
        ratio = f"{slow[0]/fast[0]:8.1f}x" if fast and slow else "        -"
        print(f"{name:<28}{fb}{sb}{ratio}")


if __name__ == "__main__":
    main()
