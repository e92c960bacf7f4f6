#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python/numpy fallback.

Runs the three hot kernels on synthetic workloads and prints per-backend
timings plus the speedup.  Both backends are imported directly, so the
comparison works regardless of which one the package selected at import.

Usage: python benchmarks/bench_kernels.py [--repeat 5] [--seed 0]
"""

import argparse
import time

import numpy as np

from appadvisor.kernels import pykernels

try:
    from appadvisor.kernels import _speedups
except ImportError:
    _speedups = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def workloads(rng):
    mask_pts = np.ascontiguousarray(rng.random((4000, 3)))
    rank_pts = np.ascontiguousarray(rng.random((1500, 3)))
    enum_mats = [
        np.ascontiguousarray(rng.random((n, 2))) for n in (9, 11, 11, 13, 6)
    ]  # ~92k combinations
    return [
        ("nondominated_mask (4000x3)", "nondominated_mask", (mask_pts,)),
        ("nondominated_rank (1500x3)", "nondominated_rank", (rank_pts,)),
        ("enumerate_front (9*11*11*13*6)", "enumerate_front", (enum_mats,)),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5, help="best-of repetitions")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    rows = []
    for label, name, fn_args in workloads(rng):
        t_py = best_of(lambda: getattr(pykernels, name)(*fn_args), args.repeat)
        if _speedups is not None:
            t_c = best_of(lambda: getattr(_speedups, name)(*fn_args), args.repeat)
            rows.append((label, t_py, t_c, t_py / t_c))
        else:
            rows.append((label, t_py, None, None))

    header = f"{'kernel':<34} {'python':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, t_py, t_c, speedup in rows:
        compiled = f"{t_c * 1e3:8.2f}ms" if t_c is not None else "     n/a"
        ratio = f"{speedup:7.1f}x" if speedup is not None else "     n/a"
        print(f"{label:<34} {t_py * 1e3:8.2f}ms {compiled} {ratio}")
    if _speedups is None:
        print("\ncompiled extension not available; showing fallback timings only")


if __name__ == "__main__":
    main()
