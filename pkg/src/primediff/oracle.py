"""Exhaustive small-order searches used as ground truth for the constructors.

Deliberately independent: nothing here calls the constructive modules, only
the shared witness types and verifiers.  Every search is capped; the cap is
configuration (argument or ORACLE_MAX_ORDER environment variable), never a
silent truncation.
"""

from __future__ import annotations

import os

from . import primes
from .errors import OrderCapExceeded
from .graphs import CycleWitness, Interval, PathWitness

DEFAULT_MAX_ORDER = 22
DEFAULT_MAX_FACTOR_ORDER = 14
ENV_MAX_ORDER = "ORACLE_MAX_ORDER"


def _general_cap(max_order: int | None) -> int:
    if max_order is not None:
        return max_order
    env = os.environ.get(ENV_MAX_ORDER)
    return int(env) if env else DEFAULT_MAX_ORDER


def _factor_cap(max_order: int | None) -> int:
    # The cycle-cover search branches harder than the path DP, so its default
    # cap is lower; an explicit argument always wins.
    if max_order is not None:
        return max_order
    return min(_general_cap(None), DEFAULT_MAX_FACTOR_ORDER)


def _guard(order: int, cap: int) -> None:
    if order > cap:
        raise OrderCapExceeded(order, cap)


def _adjacency(verts: list[int]) -> list[int]:
    """Bitmask neighbor sets by vertex index."""
    m = len(verts)
    flags = primes.prime_flags(verts[-1] - verts[0] if verts else 0)
    adj = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if flags[verts[j] - verts[i]]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def _reach_sets(adj: list[int], end: int) -> list[int]:
    """dp[mask] = bitset of v in mask admitting a path v -> end covering mask."""
    m = len(adj)
    dp = [0] * (1 << m)
    endbit = 1 << end
    dp[endbit] = endbit
    for mask in range(1 << m):
        if not mask & endbit or mask == endbit:
            continue
        acc = 0
        bits = mask & ~endbit
        while bits:
            vbit = bits & -bits
            bits ^= vbit
            v = vbit.bit_length() - 1
            if dp[mask ^ vbit] & adj[v]:
                acc |= vbit
        dp[mask] = acc
    return dp


def brute_hamilton_path(
    interval: Interval,
    endpoints: tuple[int, int],
    *,
    max_order: int | None = None,
    prefer: str = "min",
) -> PathWitness | None:
    """Bitmask-DP search for a Hamilton path between fixed endpoints.

    Returns a witness or None.  The witness walk is deterministic: from the
    start vertex it always takes the smallest viable successor ("min"), or the
    largest with prefer="max"; existence does not depend on that choice.
    """
    cap = _general_cap(max_order)
    _guard(interval.order, cap)
    a, b = endpoints
    verts = list(interval.vertices())
    if a not in interval.vertices() or b not in interval.vertices() or a == b:
        raise ValueError(f"bad endpoints {endpoints} for {interval}")
    if prefer not in ("min", "max"):
        raise ValueError("prefer must be 'min' or 'max'")
    m = len(verts)
    ai, bi = a - interval.lo, b - interval.lo
    adj = _adjacency(verts)
    dp = _reach_sets(adj, bi)
    full = (1 << m) - 1
    if not (dp[full] >> ai) & 1:
        return None
    seq = [a]
    mask, cur = full, ai
    for _ in range(m - 1):
        mask ^= 1 << cur
        cand = adj[cur] & dp[mask]
        assert cand, "reachability DP must admit a successor"
        if prefer == "min":
            nxt = (cand & -cand).bit_length() - 1
        else:
            nxt = cand.bit_length() - 1
        seq.append(verts[nxt])
        cur = nxt
    assert cur == bi
    return PathWitness(interval, tuple(seq))


def brute_infeasible_pairs(n: int, *, max_order: int | None = None) -> set[tuple[int, int]]:
    """All endpoint pairs (a < b) of [1, n] with no Hamilton path between them."""
    cap = _general_cap(max_order)
    _guard(n, cap)
    verts = list(range(1, n + 1))
    adj = _adjacency(verts)
    full = (1 << n) - 1
    out = set()
    for a in range(1, n):
        reach = _reach_sets(adj, a - 1)[full]
        for b in range(a + 1, n + 1):
            if not (reach >> (b - 1)) & 1:
                out.add((a, b))
    return out


def brute_two_factor_exists(n: int, lengths, *, max_order: int | None = None) -> bool:
    """Backtracking search: can [1, n] be covered by disjoint cycles of the
    given lengths?  Each cycle is anchored at the smallest vertex it contains,
    with a fixed orientation, so no arrangement is tried twice."""
    cap = _factor_cap(max_order)
    _guard(n, cap)
    lengths = sorted(lengths)
    if any(L < 3 for L in lengths) or sum(lengths) != n:
        raise ValueError(f"bad length multiset {lengths} for n={n}")
    flags = primes.prime_flags(n)
    nbrs = {
        v: [u for u in range(1, n + 1) if u != v and flags[abs(u - v)]]
        for v in range(1, n + 1)
    }
    unused = set(range(1, n + 1))
    remaining = lengths

    def cycles_through(s: int, length: int):
        # Simple cycles of `length` unused vertices starting at s, canonical
        # orientation: second vertex smaller than last.
        path = [s]
        on_path = {s}

        def extend():
            if len(path) == length:
                if path[1] < path[-1] and flags[abs(path[-1] - s)]:
                    yield tuple(path)
                return
            for v in nbrs[path[-1]]:
                if v in unused and v not in on_path:
                    path.append(v)
                    on_path.add(v)
                    yield from extend()
                    path.pop()
                    on_path.remove(v)

        yield from extend()

    def solve(remaining: list[int]) -> bool:
        if not unused:
            return True
        s = min(unused)
        tried: set[int] = set()
        for i, L in enumerate(remaining):
            if L in tried:
                continue
            tried.add(L)
            rest = remaining[:i] + remaining[i + 1 :]
            for cyc in cycles_through(s, L):
                unused.difference_update(cyc)
                if solve(rest):
                    return True
                unused.update(cyc)
        return False

    return solve(remaining)


def brute_diff_restricted_cycle(
    n: int, allowed, *, max_order: int | None = None
) -> CycleWitness | None:
    """First Hamilton cycle of [1, n] (by depth-first search in ascending
    neighbor order) whose differences all lie in `allowed`, or None."""
    cap = _general_cap(max_order)
    _guard(n, cap)
    if n < 3:
        return None
    allowed = frozenset(allowed)
    flags = primes.prime_flags(n)
    nbrs = {
        v: [
            u
            for u in range(1, n + 1)
            if u != v and abs(u - v) in allowed and flags[abs(u - v)]
        ]
        for v in range(1, n + 1)
    }
    path = [1]
    on_path = {1}

    def extend() -> tuple[int, ...] | None:
        if len(path) == n:
            if path[1] < path[-1] and abs(path[-1] - 1) in allowed and flags[abs(path[-1] - 1)]:
                return tuple(path)
            return None
        for v in nbrs[path[-1]]:
            if v not in on_path:
                path.append(v)
                on_path.add(v)
                found = extend()
                if found is not None:
                    return found
                path.pop()
                on_path.remove(v)
        return None

    seq = extend()
    return None if seq is None else CycleWitness(Interval(1, n), seq)
