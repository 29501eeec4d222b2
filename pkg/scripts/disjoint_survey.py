#!/usr/bin/env python3
"""Survey edge-disjoint Hamilton cycle family sizes over a range of orders.

Prints one row per order: family size, the sources used, and how many prime
pair decompositions the order admits.
"""

import argparse
from collections import Counter

from primediff.generators import edge_disjoint_cycles
from primediff.primes import prime_pair_decompositions


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--start", type=int, default=5)
    ap.add_argument("--end", type=int, default=120)
    args = ap.parse_args()

    sizes = Counter()
    print(f"{'n':>5} {'cycles':>7} {'decomps':>8}  sources")
    for n in range(args.start, args.end + 1):
        fam = edge_disjoint_cycles(n)
        decomps = len(prime_pair_decompositions(n))
        sizes[len(fam)] += 1
        print(f"{n:>5} {len(fam):>7} {decomps:>8}  {', '.join(fam.sources)}")

    print()
    print("size histogram:")
    for size in sorted(sizes):
        print(f"  {size} cycle(s): {sizes[size]} orders")


if __name__ == "__main__":
    main()
