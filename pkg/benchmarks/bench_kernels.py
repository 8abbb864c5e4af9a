#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernels against the numpy fallback.

Runs the exact max-cut enumeration on increasingly large instances and
the full labeled-graph sweep, timing both implementations on identical
inputs and verifying they return identical results.

Usage: python benchmarks/bench_kernels.py [--max-n 24]
"""
import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

import numpy as np

from k4cut import _kernels_py
from k4cut.generators import complete_multipartite, random_tripartite
from k4cut.oracle import cut_edge_masks, k4_edge_masks

try:
    from k4cut import _kernels_c
except ImportError:
    _kernels_c = None


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def bench_max_cut(max_n):
    print(f"{'instance':<28} {'numpy':>10} {'compiled':>10} {'speedup':>9}")
    for n in range(16, max_n + 1, 2):
        part = n // 3
        instances = [
            (f"turan[{part},{part},{n-2*part}]", complete_multipartite([part, part, n - 2 * part])),
            (f"tripartite(n={n},p=0.6)", random_tripartite(n, 0.6, seed=n)),
        ]
        for name, g in instances:
            res_py, t_py = timed(_kernels_py.max_cut_bruteforce, list(g.adj), g.n)
            if _kernels_c is None:
                print(f"{name:<28} {t_py:>9.3f}s {'-':>10} {'-':>9}")
                continue
            res_c, t_c = timed(_kernels_c.max_cut_bruteforce, list(g.adj), g.n)
            assert res_py == res_c, (name, res_py, res_c)
            print(f"{name:<28} {t_py:>9.3f}s {t_c:>9.3f}s {t_py / t_c:>8.1f}x")


def bench_sweep():
    print(f"\n{'sweep':<28} {'numpy':>10} {'compiled':>10} {'speedup':>9}")
    for n in (6, 7):
        bits = n * (n - 1) // 2
        k4m, cutm = k4_edge_masks(n), cut_edge_masks(n)
        (k_py, m_py), t_py = timed(_kernels_py.sweep_labeled_graphs, bits, k4m, cutm)
        name = f"all graphs n={n} (2^{bits})"
        if _kernels_c is None:
            print(f"{name:<28} {t_py:>9.3f}s {'-':>10} {'-':>9}")
            continue
        (k_c, m_c), t_c = timed(_kernels_c.sweep_labeled_graphs, bits, k4m, cutm)
        assert np.array_equal(np.asarray(k_py, dtype=bool), np.asarray(k_c, dtype=bool))
        assert np.array_equal(np.asarray(m_py), np.asarray(m_c))
        print(f"{name:<28} {t_py:>9.3f}s {t_c:>9.3f}s {t_py / t_c:>8.1f}x")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=24)
    args = parser.parse_args()
    if _kernels_c is None:
        print("compiled kernels not built; timing the numpy fallback only\n")
    bench_max_cut(args.max_n)
    bench_sweep()


if __name__ == "__main__":
    main()
