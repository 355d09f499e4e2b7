#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Workloads (inputs are prepared outside the timed region):
  * pattern counting over a small exhaustive sweep (backtracking search)
  * left-aligned detection across the reduction-gadget family
  * inversion counting on a large random permutation (merge counting)

Usage: python benchmarks/bench_kernels.py [--inversions-n N] [--repeats R]
"""
from __future__ import annotations

import argparse
import itertools
import random
import time

from permpat import _kernels_py

try:
    from permpat import _kernels
except ImportError:
    _kernels = None

from permpat import psi, selfcheck


def _time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def counting_inputs() -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    patterns = [
        p for k in range(1, 5) for p in itertools.permutations(range(1, k + 1))
    ]
    rng = random.Random(1)
    texts = []
    for _ in range(40):
        vals = list(range(1, 11))
        rng.shuffle(vals)
        texts.append(tuple(vals))
    return [(pat, txt) for pat in patterns for txt in texts]


def gadget_inputs() -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    rng = random.Random(2)
    family = rng.sample(list(selfcheck.psi_family(ks=(3,), max_n=4)), 300)
    out = []
    for inst in family:
        gadget = psi.reduce_psi(inst)
        out.append((gadget.pattern.values, gadget.text.values))
    return out


def inversion_input(n: int) -> list[int]:
    rng = random.Random(3)
    vals = list(range(1, n + 1))
    rng.shuffle(vals)
    return vals


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--inversions-n", type=int, default=10**6)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    kernels = [("pure-python", _kernels_py)]
    if _kernels is not None:
        kernels.append(("compiled", _kernels))
    else:
        print("note: compiled kernels not built; timing the fallback only\n")

    count_pairs = counting_inputs()
    gadget_pairs = gadget_inputs()
    inv_vals = inversion_input(args.inversions_n)

    def count_workload(kernel):
        for pat, txt in count_pairs:
            kernel.count_pattern(pat, txt)

    def detect_workload(kernel):
        for pat, txt in gadget_pairs:
            kernel.count_pattern(pat, txt, True, 1)

    def inversion_workload(kernel):
        kernel.count_inversions(inv_vals)

    workloads = [
        (f"pattern counting ({len(count_pairs)} pairs, n=10)", count_workload),
        (f"gadget detection ({len(gadget_pairs)} reduction instances)", detect_workload),
        (f"inversions (n={args.inversions_n})", inversion_workload),
    ]

    results: dict[str, dict[str, float]] = {}
    for wname, wfn in workloads:
        results[wname] = {}
        for kname, kernel in kernels:
            results[wname][kname] = _time(lambda: wfn(kernel), args.repeats)

    width = max(len(w) for w, _ in workloads)
    print(f"{'workload':<{width}}  {'pure-python':>12}  {'compiled':>12}  {'speedup':>8}")
    for wname, _ in workloads:
        row = results[wname]
        pure = row["pure-python"]
        comp = row.get("compiled")
        if comp is None:
            print(f"{wname:<{width}}  {pure:>11.3f}s  {'-':>12}  {'-':>8}")
        else:
            print(f"{wname:<{width}}  {pure:>11.3f}s  {comp:>11.3f}s  {pure / comp:>7.1f}x")


if __name__ == "__main__":
    main()
