"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/kernel_bench.py [--n 2000] [--m 2000] [--repeats 5]

Times disk_hit_lists (grid-accelerated intersection lists) and
all_traces_realized (shattering trace check) on identical inputs and
checks that both backends return the same results.
"""

import argparse
import statistics
import time

import numpy as np

from pdhyper import _kernels_py

try:
    from pdhyper import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times), out


def bench_disk_hit_lists(n, m, repeats, rng):
    spread = 2.2 * np.sqrt(n)
    px, py = rng.uniform(0, spread, n), rng.uniform(0, spread, n)
    pr = rng.uniform(0.5, 1.0, n)
    fx, fy = rng.uniform(0, spread, m), rng.uniform(0, spread, m)
    fr = rng.uniform(0.5, 1.0, m)
    cell = float(np.median(2 * pr))
    rows = []
    baseline = None
    for name, mod in backends():
        t_min, t_med, out = best_of(
            lambda: mod.disk_hit_lists(px, py, pr, fx, fy, fr, cell, 0), repeats
        )
        if baseline is None:
            baseline = out
        assert out == baseline, f"{name} disagrees on disk_hit_lists"
        rows.append((f"disk_hit_lists n={n} m={m}", name, t_min, t_med))
    return rows


def bench_traces(n_masks, repeats, rng):
    # sparse masks so most traces stay unseen and the scan cannot exit early
    width = 40
    mask_arr = np.zeros(n_masks, dtype=np.uint64)
    for _ in range(3):
        mask_arr |= np.uint64(1) << rng.integers(0, width, size=n_masks, dtype=np.uint64)
    mask_list = [int(v) for v in mask_arr]
    positions = sorted(rng.choice(width, size=5, replace=False).tolist())
    pos_arr = np.asarray(positions, dtype=np.int64)
    kmask = sum(1 << p for p in positions)
    rows = []
    baseline = None
    for name, mod in backends():
        if mod is _kernels:
            fn = lambda: mod.all_traces_realized(mask_arr, kmask, pos_arr, False)
        else:
            fn = lambda: mod.all_traces_realized(mask_list, kmask, positions, False)
        t_min, t_med, out = best_of(fn, repeats)
        if baseline is None:
            baseline = bool(out)
        assert bool(out) == baseline, f"{name} disagrees on all_traces_realized"
        rows.append((f"all_traces_realized masks={n_masks} d=5", name, t_min, t_med))
    return rows


def backends():
    yield "pure", _kernels_py
    if _kernels is not None:
        yield "cython", _kernels


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=2000)
    ap.add_argument("--m", type=int, default=2000)
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if _kernels is None:
        print("compiled extension not available; timing pure backend only")
    rng = np.random.Generator(np.random.PCG64(args.seed))
    rows = bench_disk_hit_lists(args.n, args.m, args.repeats, rng)
    rows += bench_traces(200_000, args.repeats, rng)

    print(f"{'benchmark':<42} {'backend':<8} {'min (s)':>10} {'median (s)':>12}")
    speedups = {}
    for bench, name, t_min, t_med in rows:
        print(f"{bench:<42} {name:<8} {t_min:>10.4f} {t_med:>12.4f}")
        speedups.setdefault(bench, {})[name] = t_min
    for bench, times in speedups.items():
        if "cython" in times:
            print(f"{bench}: cython speedup {times['pure'] / times['cython']:.1f}x")


if __name__ == "__main__":
    main()
