#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Covers the two hot paths: whole-table law checking (order 256, the size
ceiling) and the structure-constant search (the order-8 elementary abelian
group, the largest space the default catalogs hit).
"""

import argparse
import os
import time

import numpy as np

from ringcent import kernels
from ringcent.enumeration import _search_inputs
from ringcent.gallery import modular_ring, row_ring, upper_triangular_ring


def timed(func, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = func(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench(repeat: int) -> None:
    big = modular_ring(256)
    ut5 = upper_triangular_ring(5)
    cv222, al222 = _search_inputs((2, 2, 2))
    cv224, al224 = _search_inputs((2, 2, 4))

    cases = [
        ("add_table_check n=256", kernels.add_table_check, (big.add,)),
        ("mul_assoc_check n=256", kernels.mul_assoc_check, (big.mul,)),
        ("distrib_check  n=256", kernels.distrib_check, (big.add, big.mul)),
        ("distrib_check  n=125", kernels.distrib_check, (ut5.add, ut5.mul)),
        ("search (2,2,2)", kernels.structure_search,
         ((2, 2, 2), cv222, al222, 1 << 62)),
        ("search (2,2,4)", kernels.structure_search,
         ((2, 2, 4), cv224, al224, 1 << 62)),
    ]

    timings = {}
    for backend in ("numba", "numpy"):
        os.environ["RINGCENT_BACKEND"] = backend
        # warm the JIT so compile time is not measured
        kernels.add_table_check(row_ring(2).add)
        kernels.mul_assoc_check(row_ring(2).mul)
        kernels.distrib_check(row_ring(2).add, row_ring(2).mul)
        kernels.structure_search((2,), *_search_inputs((2,)), 1 << 62)
        for name, func, args in cases:
            secs, result = timed(func, *args, repeat=repeat)
            timings.setdefault(name, {})[backend] = (secs, result)
    os.environ.pop("RINGCENT_BACKEND", None)

    print(f"{'kernel':24s} {'numba':>10s} {'numpy':>10s} {'speedup':>9s}")
    for name, by_backend in timings.items():
        t_nb, r_nb = by_backend["numba"]
        t_np, r_np = by_backend["numpy"]
        if isinstance(r_nb, tuple) and isinstance(r_nb[0], np.ndarray):
            assert np.array_equal(r_nb[0], r_np[0]), f"{name}: result mismatch"
        else:
            assert r_nb == r_np, f"{name}: result mismatch"
        print(f"{name:24s} {t_nb * 1e3:9.2f}ms {t_np * 1e3:9.2f}ms "
              f"{t_np / t_nb:8.1f}x")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    bench(ap.parse_args().repeat)
