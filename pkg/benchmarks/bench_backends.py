#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the two hot paths -- transform-chain membership over a grid and
full solver-vs-oracle verification -- on identical inputs with both
backends.  The first numba call per kernel is a warmup (JIT compile,
not timed).

Usage:
    python benchmarks/bench_backends.py [--res N] [--repeat K]
"""

from __future__ import annotations

import argparse
import time

from lexineq import _kernels
from lexineq._backend import force_backend
from lexineq.oracle import GridSpec, verify
from lexineq.region import Invert, Region, Rotate, Scale, Sqrt, Translate, membership_grid
from lexineq.solver import Fractional, Linear, LinearSystem, Quadratic, solve

REGION = Region(
    0.25 - 0.5j,
    (Invert(), Rotate(0.8), Scale(1.5), Translate(0.5 + 0.25j), Sqrt(), Rotate(-0.3)),
)

PROBLEMS = {
    "linear": Linear(1.5 - 2j, 0.25 + 1j),
    "system": LinearSystem(1 + 2j, 0.5j, -1 + 0.25j, 2 + 0j),
    "fractional": Fractional(1 + 1j, 3 + 0j, 1 + 0j, 0.5j),
    "quadratic": Quadratic(-2 + 1j, 1 + 0j, 0.125 - 3j),
}


def _time(fn, repeat: int) -> float:
    fn()  # warmup (JIT compile on the numba lane)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(res: int, repeat: int) -> None:
    grid = GridSpec(-5, 5, -5, 5, res, res)
    zr, zi = grid.points()
    solutions = {name: solve(p) for name, p in PROBLEMS.items()}

    jobs = [("membership %dx%d (6-step chain)" % (res, res),
             lambda: membership_grid(REGION, zr, zi))]
    for name, problem in PROBLEMS.items():
        jobs.append((f"verify {name} {res}x{res}",
                     lambda p=problem, s=solutions[name]: verify(p, s, grid)))

    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    if not _kernels.HAVE_NUMBA:
        print("numba is not available in this process; timing the numpy lane only")

    results: dict[str, dict[str, float]] = {}
    for backend in backends:
        with force_backend(backend):
            for label, fn in jobs:
                results.setdefault(label, {})[backend] = _time(fn, repeat)

    width = max(len(label) for label, _ in jobs)
    header = f"{'workload':<{width}}  {'numpy':>10}"
    if "numba" in backends:
        header += f"  {'numba':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, _ in jobs:
        row = results[label]
        line = f"{label:<{width}}  {row['numpy'] * 1e3:>8.2f}ms"
        if "numba" in row:
            line += f"  {row['numba'] * 1e3:>8.2f}ms  {row['numpy'] / row['numba']:>7.1f}x"
        print(line)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--res", type=int, default=401, help="grid samples per axis (default 401)")
    ap.add_argument("--repeat", type=int, default=5, help="timed repetitions, best-of (default 5)")
    args = ap.parse_args()
    bench(args.res, args.repeat)


if __name__ == "__main__":
    main()
