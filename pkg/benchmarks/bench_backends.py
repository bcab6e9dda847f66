#!/usr/bin/env python3
"""Benchmark: compiled kernel vs pure-Python twin on the hot path.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""
import argparse
import time

from sumdiff import _kernel_py

try:
    from sumdiff import _kernel
except ImportError:
    _kernel = None


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        started = time.perf_counter()
        fn()
        times.append(time.perf_counter() - started)
    return min(times)


def rate_batch(kernel):
    for B in range(1, 11):
        for k in range(1, 200):
            kernel.rate_value(0.5 * B * k / 200, B, 1e-12)


def single_cell(kernel):
    kernel.maximize_r(5, 1e-10, 1e-12)


def full_column(kernel):
    for B in range(3, 11):
        kernel.maximize_r(B, 1e-10, 1e-12)


CASES = [
    ("rate_value x 1990", rate_batch),
    ("maximize_r(B=5, eps=1e-10)", single_cell),
    ("table column B=3..10 @ 1e-10", full_column),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = [("python", _kernel_py)]
    if _kernel is not None:
        backends.append(("compiled", _kernel))
    else:
        print("compiled kernel not built; benchmarking the fallback only\n")

    print(f"{'case':<32}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for label, fn in CASES:
        row = [best_of(args.repeat, lambda k=kernel: fn(k)) for _, kernel in backends]
        cells = "".join(f"{t * 1000:>10.2f}ms" for t in row)
        speedup = f"{row[0] / row[-1]:>9.1f}x" if len(row) == 2 else ""
        print(f"{label:<32}{cells}{speedup}")

    if _kernel is not None:
        # the twins must agree exactly; a mismatch means they diverged
        a = _kernel.maximize_r(5, 1e-10, 1e-12)
        b = _kernel_py.maximize_r(5, 1e-10, 1e-12)
        print(f"\nbackend agreement on maximize_r(5): {'exact' if a == b else f'DIVERGED: {a} vs {b}'}")


if __name__ == "__main__":
    main()
