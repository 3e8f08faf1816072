"""Time hom_count with the numba kernel against the numpy kernel.

Usage: python benchmarks/bench_homcount.py [--repeat N] [--max-degree K]
"""

from __future__ import annotations

import argparse
import time

from toruslink import LinkSpec, hom_count, link_group
from toruslink.analysis._kernels import HAVE_NUMBA

CASES = [
    ("trefoil", LinkSpec(((1, 2, 3),))),
    ("Hopf link", LinkSpec(((2, 1, 1),))),
    ("(3,2,3) link", LinkSpec(((3, 2, 3),))),
    ("(2,1,1) with unknots", LinkSpec(((2, 1, 1),), True, True)),
    ("nested (1,2,3)/(2,1,1)", LinkSpec(((1, 2, 3), (2, 1, 1)), exterior_unknot=True)),
]


def best_time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-degree", type=int, default=4)
    args = ap.parse_args()

    kernels = [("numpy", False)] + ([("numba", True)] if HAVE_NUMBA else [])
    if HAVE_NUMBA:
        hom_count(link_group(CASES[0][1]), 2, use_numba=True)  # compile outside the timings
    else:
        print("numba not installed; timing the numpy kernel only")

    header = f"{'case':<26}{'k':>3}{'count':>12}" + "".join(f"{name + ' s':>12}" for name, _ in kernels)
    print(header)
    print("-" * len(header))
    for label, spec in CASES:
        G = link_group(spec)
        for k in range(2, args.max_degree + 1):
            counts, times = set(), []
            for _, flag in kernels:
                counts.add(hom_count(G, k, use_numba=flag))
                times.append(best_time(lambda: hom_count(G, k, use_numba=flag), args.repeat))
            if len(counts) != 1:
                raise SystemExit(f"kernels disagree on {label} at k={k}: {sorted(counts)}")
            row = f"{label:<26}{k:>3}{counts.pop():>12}" + "".join(f"{t:>12.4f}" for t in times)
            print(row)


if __name__ == "__main__":
    main()
