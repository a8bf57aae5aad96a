"""Timing comparison of the numba and numpy sweep kernels.

Run:  python3 benchmarks/bench_backends.py
JIT compilation happens in a warmup pass, so the numbers reflect steady
state.  Both backends return identical results; this only measures speed.
"""

import time

import numpy as np

from mayskit._backend import HAS_NUMBA
from mayskit._kernels import sweep_classes, sweep_tables, warmup
from mayskit._maps import class_count


def bench(label, fn, repeats=3):
    times = []
    for _ in range(repeats):
        started = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - started)
    best = min(times)
    print(f"  {label:<14} {best * 1000:10.1f} ms   survivors={result.size}")
    return best


def main():
    backends = ["numpy"] + (["numba"] if HAS_NUMBA else [])
    for b in backends:
        warmup(b)

    jobs = [
        ("tables n=2 (19,683 candidates)", lambda b: sweep_tables(2, 0, 3**9, b)),
        ("classes n=3 (59,049 candidates)", lambda b: sweep_classes(3, 0, 3 ** class_count(3), b)),
        ("classes n=4 (14,348,907 candidates)", lambda b: sweep_classes(4, 0, 3 ** class_count(4), b)),
    ]
    for title, job in jobs:
        print(title)
        results = {}
        timings = {}
        for b in backends:
            timings[b] = bench(b, lambda b=b: job(b))
            results[b] = job(b)
        if len(backends) == 2:
            assert np.array_equal(results["numpy"], results["numba"]), "backend mismatch"
            print(f"  speedup        {timings['numpy'] / timings['numba']:10.1f} x")
        print()


if __name__ == "__main__":
    main()
