#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot kernels on realistic batches: canonical labeling over
every 7-vertex isomorphism class, cycle-length search over the same
classes plus dense 14-vertex random graphs, and power iteration over
20-vertex random graphs. Usage:

    python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

from cyclespec import _kernels_py as pure
from cyclespec import gnp
from cyclespec.verify import enumerate_graphs

try:
    from cyclespec import _kernels as compiled
except ImportError:
    compiled = None


def timed(fn, *args):
    start = time.perf_counter()
    fn(*args)
    return time.perf_counter() - start


def bench_canonical(impl, batch):
    for n, rows in batch:
        impl.canonical_key(n, rows)


def bench_cycles(impl, batch):
    targets = (1 << 62) - 1
    for n, rows in batch:
        impl.cycle_search(n, rows, targets)


def bench_power(impl, batch):
    for n, rows in batch:
        impl.power_method(n, rows, 1e-10, 10**6)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller batches")
    args = parser.parse_args()

    classes7 = [(g.n, g.adj) for g in enumerate_graphs(7)]
    dense14 = [(14, gnp(14, 1, 2, seed=i).adj) for i in range(20 if args.quick else 100)]
    random20 = [(20, gnp(20, 1, 2, seed=i).adj) for i in range(100 if args.quick else 500)]

    benches = [
        ("canonical_key, 1044 classes n=7", bench_canonical, classes7),
        ("cycle_search, 1044 classes n=7", bench_cycles, classes7),
        (f"cycle_search, {len(dense14)} x G(14,1/2)", bench_cycles, dense14),
        (f"power_method, {len(random20)} x G(20,1/2)", bench_power, random20),
    ]

    impls = [("pure", pure)]
    if compiled is not None:
        impls.insert(0, ("compiled", compiled))
    else:
        print("compiled kernels not built; benchmarking pure only\n")

    width = max(len(name) for name, _, _ in benches)
    header = f"{'benchmark':<{width}}" + "".join(f"  {name:>10}" for name, _ in impls)
    if compiled is not None:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, fn, batch in benches:
        times = [timed(fn, impl, batch) for _, impl in impls]
        line = f"{name:<{width}}" + "".join(f"  {t:>9.3f}s" for t in times)
        if compiled is not None:
            line += f"  {times[1] / times[0]:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
