#!/usr/bin/env python3
"""Benchmark the jitted kernels against the pure-numpy fallback.

Times the three hot paths (table-field RREF, normal-ordering products, the
Gram recursion) on both backends and prints the speedups.  The first jitted
call includes compilation unless the on-disk cache is warm; a warmup round
keeps that out of the numbers.

    python benchmarks/bench_backends.py [--quick]
"""

import argparse
import time

import numpy as np

from sl2blocks import _kernels_numpy as knp
from sl2blocks.pbw import Character, algebra

try:
    from sl2blocks import _kernels_numba as knb
except ImportError:
    knb = None


def timeit(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_case(name, make_args, runners, repeat):
    # rebuild the arguments on every call: rref works in place, so a stale
    # tuple would hand later runs an already-reduced matrix
    times = []
    for impl in runners:
        if impl is None:
            times.append(None)
            continue
        fn = lambda: impl(*make_args())
        fn()  # warmup (also compiles on the jitted side)
        times.append(timeit(fn, repeat))
    return times


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller sizes")
    opts = ap.parse_args()
    repeat = 3
    rng = np.random.default_rng(0)

    p_big = 7 if opts.quick else 11
    cases = []

    A7 = algebra(7, Character.zero())
    n = A7.dim
    M = rng.integers(0, 7, (n, n)).astype(np.int64)
    cases.append(
        (
            f"rref {n}x{n} over F_7",
            lambda: (M.copy(), A7.field.add, A7.field.mul, A7.field.inv, A7.field.neg),
            (knb.rref if knb else None, knp.rref),
        )
    )

    Ab = algebra(p_big, Character.zero())
    u = rng.integers(0, p_big, Ab.dim).astype(np.int64)
    v = rng.integers(0, p_big, Ab.dim).astype(np.int64)
    mul_args = (Ab.p, Ab.echar, Ab.hshift, Ab.rhf, Ab.rhe, Ab.reb,
                Ab.field.add, Ab.field.mul)
    cases.append(
        (
            f"algebra product p={p_big}",
            lambda: (u, v) + mul_args,
            (knb.alg_mul if knb else None, knp.alg_mul),
        )
    )
    cases.append(
        (
            f"left-multiplication matrix p={p_big}",
            lambda: (u,) + mul_args,
            (knb.left_mul_matrix if knb else None, knp.left_mul_matrix),
        )
    )
    cases.append(
        (
            "Gram matrix p=7",
            lambda: (7, A7.echar, A7.hshift, A7.field.add, A7.field.mul),
            (knb.gram if knb else None, knp.gram),
        )
    )

    Ar = algebra(3, Character.regular(1))
    mr = rng.integers(0, Ar.field.q, (27, 27)).astype(np.int64)
    cases.append(
        (
            "rref 27x27 over F_27",
            lambda: (mr.copy(), Ar.field.add, Ar.field.mul, Ar.field.inv, Ar.field.neg),
            (knb.rref if knb else None, knp.rref),
        )
    )

    print(f"{'case':40s} {'numba':>10s} {'numpy':>10s} {'speedup':>9s}")
    for name, make_args, runners in cases:
        t_nb, t_np = bench_case(name, make_args, runners, repeat)
        nb_s = f"{t_nb*1e3:8.2f}ms" if t_nb is not None else "      n/a"
        ratio = f"{t_np / t_nb:8.1f}x" if t_nb else "        -"
        print(f"{name:40s} {nb_s:>10s} {t_np*1e3:8.2f}ms {ratio:>9s}")


if __name__ == "__main__":
    main()
