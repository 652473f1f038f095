#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import math
import statistics
import time

from triangle_words._kernels import pure

try:
    from triangle_words._kernels import _fast as fast
except ImportError:
    fast = None


def timeit(fn, repeat):
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return min(samples), statistics.median(samples)


def bench_segment(backend):
    def run():
        for m in range(3, 120):
            for r in range(2, m):
                if math.gcd(r, m) != 1:
                    continue
                for c in range(1, m - 1):
                    backend.segment_perm_check(m, r, c)

    return run


def bench_multiplier(backend):
    def run():
        for k, l, m in [(10, 10, 10), (12, 11, 7), (9, 8, 12)]:
            backend.multiplier_units(k, l, m)

    return run


def bench_twisted(backend):
    from triangle_words.groups import corpus_group

    G = corpus_group("a4")
    phi = list(range(G.order))
    # an unreachable target: psi = id makes psi(v) v^-1 trivial
    ub, ue = (1, 2, 1), (1, 1)

    def run():
        backend.twisted_search(G.order, G._mul, G._inv, phi, 0, ub, ue, 3)

    return run


def bench_grid(backend):
    def run():
        for rc in (0.21, 0.52, 0.83):
            backend.grid_class_distance(0.3, 0.4, rc, 0.0, 0.005, 200, 0.0, 0.01, 501)

    return run


BENCHES = [
    ("segment_perm_check", bench_segment),
    ("multiplier_units", bench_multiplier),
    ("twisted_search (miss)", bench_twisted),
    ("grid_class_distance", bench_grid),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    print(f"{'kernel':<24} {'pure (s)':>10} {'fast (s)':>10} {'speedup':>8}")
    for name, make in BENCHES:
        best_pure, _ = timeit(make(pure), args.repeat)
        if fast is None:
            print(f"{name:<24} {best_pure:>10.4f} {'n/a':>10} {'n/a':>8}")
            continue
        best_fast, _ = timeit(make(fast), args.repeat)
        print(
            f"{name:<24} {best_pure:>10.4f} {best_fast:>10.4f} "
            f"{best_pure / best_fast:>7.1f}x"
        )


if __name__ == "__main__":
    main()
