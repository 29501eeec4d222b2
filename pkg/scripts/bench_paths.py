#!/usr/bin/env python3
"""Benchmark Hamilton path construction across all endpoint pairs.

For each sampled order, builds a path for every endpoint pair and reports
total time plus time per witness and per vertex.  The per-vertex column
staying flat as n grows is the point: construction cost is linear in n.
"""

import argparse
import time

from primediff.paths import hamilton_path


def bench(n: int) -> tuple[int, float]:
    pairs = 0
    t0 = time.perf_counter()
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            hamilton_path(n, a, b)
            pairs += 1
    return pairs, time.perf_counter() - t0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", type=int, nargs="*", default=[20, 40, 80, 160, 320])
    args = ap.parse_args()

    print(f"{'n':>6} {'pairs':>8} {'total s':>9} {'us/witness':>11} {'us/vertex':>10}")
    for n in args.orders:
        pairs, dt = bench(n)
        per_w = dt / pairs * 1e6
        print(f"{n:>6} {pairs:>8} {dt:>9.3f} {per_w:>11.1f} {per_w / n:>10.2f}")


if __name__ == "__main__":
    main()
