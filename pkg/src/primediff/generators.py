"""Difference-restricted and edge-disjoint cycle families.

Three generators: Hamilton paths and cycles using only differences 2 and 3,
Hamilton cycles using only the two primes of a decomposition n = p + q, and
families of pairwise edge-disjoint Hamilton cycles assembled from both.  The
two-prime cycles for distinct decompositions of the same n use disjoint
difference sets, so they never share an edge; only the {2, 3} cycle can
collide with a pair containing 2 or 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstructionError, Infeasible, NotFound
from .graphs import (
    CycleWitness,
    Interval,
    PathWitness,
    canonical_cycle,
    verify_cycle,
    verify_edge_disjoint,
    verify_path,
)
from .paths import hamilton_cycle
from .primes import is_prime, prime_arithmetic_progression, prime_pair_decompositions


def _checked_cycle23(n: int, seq: tuple[int, ...]) -> CycleWitness:
    w = CycleWitness(Interval(1, n), seq)
    v = verify_cycle(w, allowed_diffs={2, 3})
    if not v:
        raise ConstructionError(f"{{2,3}} cycle self-check failed: {v.reason} {v.detail}")
    return w


def path_diff23(n: int) -> PathWitness:
    """Hamilton path of [1, n] using only differences 2 and 3 (n >= 6).

    Runs from n down to n - 1: one parity descends, a four-vertex elbow
    turns around at the bottom, the other parity ascends.
    """
    if n < 6:
        raise ValueError(f"need n >= 6, got {n}")
    if n % 2 == 0:
        seq = tuple(range(n, 5, -2)) + (3, 1, 4, 2) + tuple(range(5, n, 2))
    else:
        seq = tuple(range(n, 4, -2)) + (2, 4, 1, 3) + tuple(range(6, n, 2))
    w = PathWitness(Interval(1, n), seq)
    v = verify_path(w, (n, n - 1))
    if not v or any(abs(x - y) not in (2, 3) for x, y in zip(seq, seq[1:])):
        raise ConstructionError("difference-{2,3} path self-check failed")
    return w


def cycle_diff23(n: int) -> CycleWitness:
    """Hamilton cycle of [1, n] using only differences 2 and 3.

    Exists for n = 5 and all n >= 10; the orders between admit none.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if n == 5:
        return _checked_cycle23(5, (1, 4, 2, 5, 3))
    if n < 10:
        raise Infeasible(f"no {{2, 3}}-difference Hamilton cycle at order {n}", n=n)
    # Glue two difference-{2,3} paths: one on [1, h+1] from h+1 to h, one on
    # [h, n] from n down to n-1 complemented to run h -> h+1; the junction
    # differences are |h+1 - h| mates already inside the two sequences, and
    # the seam edges are h+1..(second path start) and (second path end)..h+1.
    h = n // 2
    a_part = path_diff23(h + 1).sequence
    p = path_diff23(n - h + 1).sequence
    b_part = tuple(n + 1 - v for v in p)  # h -> h+1 on [h, n]
    return _checked_cycle23(n, a_part + b_part[1:-1])


def cycle_two_primes(n: int, pair: tuple[int, int]) -> CycleWitness:
    """Hamilton cycle of [1, n] using only the differences p and q = n - p.

    Requires p and q to be distinct primes with p + q = n.  Stepping by p
    modulo n visits every vertex exactly once (p and n are coprime: any
    common factor of p and n would divide q as well), and each step wraps to
    a difference of p or q.
    """
    p, q = sorted(pair)
    if p == q:
        raise ValueError(f"primes must be distinct, got {pair}")
    if p + q != n:
        raise ValueError(f"{p} + {q} != {n}")
    if not (is_prime(p) and is_prime(q)):
        raise ValueError(f"({p}, {q}) is not a prime pair")
    seq = canonical_cycle(tuple((i * p) % n + 1 for i in range(n)))
    w = CycleWitness(Interval(1, n), seq)
    v = verify_cycle(w, allowed_diffs={p, q})
    if not v:
        raise ConstructionError(f"two-prime cycle self-check failed: {v.reason} {v.detail}")
    return w


@dataclass(frozen=True)
class DisjointFamily:
    """Pairwise edge-disjoint Hamilton cycles of one interval."""

    interval: Interval
    cycles: tuple[CycleWitness, ...]
    sources: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.cycles)


def _family(n: int, cycles: list[CycleWitness], sources: list[str]) -> DisjointFamily:
    v = verify_edge_disjoint(cycles)
    if not v:
        raise ConstructionError(f"family self-check failed: {v.reason} {v.detail}")
    return DisjointFamily(Interval(1, n), tuple(cycles), tuple(sources))


def edge_disjoint_cycles(n: int) -> DisjointFamily:
    """A family of pairwise edge-disjoint Hamilton cycles of [1, n] (n >= 5).

    Takes one cycle per prime-pair decomposition of n, plus the {2, 3} cycle
    when it exists and collides with at most one pair (dropping that pair:
    the swap never shrinks the family).  Falls back to a single generic
    Hamilton cycle when no decomposition exists and n < 10.
    """
    if n < 5:
        raise ValueError(f"need n >= 5, got {n}")
    pairs = prime_pair_decompositions(n)
    cycles: list[CycleWitness] = []
    sources: list[str] = []

    conflicted = [pr for pr in pairs if 2 in pr or 3 in pr]
    use_23 = (n == 5 or n >= 10) and len(conflicted) <= 1
    kept = [pr for pr in pairs if not (use_23 and pr in conflicted)]

    for p, q in kept:
        cycles.append(cycle_two_primes(n, (p, q)))
        sources.append(f"pair:{p},{q}")
    if use_23:
        cycles.append(cycle_diff23(n))
        sources.append("diff23")
    if not cycles:
        cycles.append(hamilton_cycle(n))
        sources.append("fallback")
    return _family(n, cycles, sources)


def n_for_t_disjoint(t: int, search_limit: int = 10_000) -> tuple[int, DisjointFamily]:
    """An order n with at least t pairwise edge-disjoint Hamilton cycles.

    Pairs the ends of a 2t-term arithmetic progression of primes: each of
    the t symmetric pairs sums to the same n, giving t two-prime cycles with
    pairwise disjoint difference sets.  Both the first term and the common
    difference of the progression are searched up to search_limit.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    ap = prime_arithmetic_progression(2 * t, search_limit)
    if ap is None:
        raise NotFound(
            f"no {2 * t}-term prime arithmetic progression within {search_limit}"
        )
    n = ap[0] + ap[-1]
    cycles: list[CycleWitness] = []
    sources: list[str] = []
    for i in range(t):
        p, q = ap[i], ap[2 * t - 1 - i]
        cycles.append(cycle_two_primes(n, (p, q)))
        sources.append(f"pair:{p},{q}")
    return n, _family(n, cycles, sources)
