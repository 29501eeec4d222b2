"""Hamilton paths with designated endpoints, and Hamilton cycles.

Everything is built from fixed seed tables plus three interval moves
(complement, shift, reversal): long paths wrap or chain shorter ones, and
arbitrary endpoint pairs reduce to paths that start at 1.  Orders 5 through 8
carry a handful of genuinely infeasible endpoint pairs, listed exactly; from
order 9 on every pair is realizable.  Each public constructor re-verifies its
witness before returning it.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import ConstructionError, Infeasible, NonEdge
from .graphs import CycleWitness, Interval, PathWitness, verify_cycle, verify_path
from .primes import is_prime

# ---------------------------------------------------------------------------
# Seed tables.
#
# BASE_SEEDS[(n, m)] is a Hamilton path of [1, n] from 1 to m.  For each
# m in [2, 6] the seeds cover the orders below the generic recursion's reach;
# (5, 3) and (5, 4) are the only endpoint pairs realizable at order 5 from
# vertex 1.

BASE_SEEDS: dict[tuple[int, int], tuple[int, ...]] = {
    (6, 2): (1, 4, 6, 3, 5, 2),
    (7, 2): (1, 4, 6, 3, 5, 7, 2),
    (5, 3): (1, 4, 2, 5, 3),
    (6, 3): (1, 6, 4, 2, 5, 3),
    (7, 3): (1, 6, 4, 2, 7, 5, 3),
    (8, 3): (1, 4, 2, 7, 5, 8, 6, 3),
    (9, 3): (1, 4, 2, 5, 7, 9, 6, 8, 3),
    (5, 4): (1, 3, 5, 2, 4),
    (6, 4): (1, 6, 3, 5, 2, 4),
    (7, 4): (1, 6, 3, 5, 2, 7, 4),
    (8, 4): (1, 3, 6, 8, 5, 7, 2, 4),
    (6, 5): (1, 3, 6, 4, 2, 5),
    (7, 5): (1, 3, 6, 4, 2, 7, 5),
    (8, 5): (1, 8, 3, 6, 4, 2, 7, 5),
    (9, 5): (1, 4, 2, 7, 9, 6, 3, 8, 5),
    (10, 5): (1, 4, 2, 9, 6, 3, 8, 10, 7, 5),
    (6, 6): (1, 3, 5, 2, 4, 6),
    (7, 6): (1, 4, 7, 2, 5, 3, 6),
    (8, 6): (1, 8, 3, 5, 7, 2, 4, 6),
    (9, 6): (1, 4, 7, 9, 2, 5, 3, 8, 6),
    (10, 6): (1, 4, 2, 5, 3, 8, 10, 7, 9, 6),
}

# INIT_1M[(n, m)] extends the reachable far endpoints to m in [7, 10] for the
# four orders the five-step chaining below cannot reduce further.

INIT_1M: dict[tuple[int, int], tuple[int, ...]] = {
    (7, 7): (1, 3, 6, 4, 2, 5, 7),
    (8, 7): (1, 8, 6, 3, 5, 2, 4, 7),
    (8, 8): (1, 3, 5, 7, 2, 4, 6, 8),
    (9, 7): (1, 3, 5, 8, 6, 9, 4, 2, 7),
    (9, 8): (1, 3, 5, 7, 9, 2, 4, 6, 8),
    (9, 9): (1, 3, 5, 8, 6, 4, 7, 2, 9),
    (10, 7): (1, 4, 2, 9, 6, 3, 5, 8, 10, 7),
    (10, 8): (1, 4, 2, 9, 7, 10, 5, 3, 6, 8),
    (10, 9): (1, 8, 3, 5, 10, 7, 2, 4, 6, 9),
    (10, 10): (1, 3, 5, 7, 9, 2, 4, 6, 8, 10),
}

# Orders 5..8: the full list of infeasible endpoint pairs, and explicit rows
# for every feasible pair not reachable from vertex 1 or vertex n.  Rows are
# stored exactly as tabulated; mirrored rows are their complements.

EXCEPTION_PAIRS: dict[int, frozenset[tuple[int, int]]] = {
    5: frozenset({(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)}),
    6: frozenset({(2, 3), (3, 4), (4, 5)}),
    7: frozenset({(3, 4), (4, 5)}),
    8: frozenset({(4, 5)}),
}

SMALL_ORDER_ROWS: dict[tuple[int, tuple[int, int]], tuple[int, ...]] = {
    (5, (1, 3)): (1, 4, 2, 5, 3),
    (5, (3, 5)): (5, 2, 4, 1, 3),
    (5, (1, 4)): (1, 3, 5, 2, 4),
    (5, (2, 5)): (5, 3, 1, 4, 2),
    (5, (2, 4)): (2, 5, 3, 1, 4),
    (6, (2, 4)): (2, 5, 3, 6, 1, 4),
    (6, (3, 5)): (5, 2, 4, 1, 6, 3),
    (6, (2, 5)): (2, 4, 6, 1, 3, 5),
    (7, (2, 3)): (2, 5, 7, 4, 1, 6, 3),
    (7, (5, 6)): (6, 3, 1, 4, 7, 2, 5),
    (7, (2, 4)): (2, 7, 5, 3, 6, 1, 4),
    (7, (4, 6)): (6, 1, 3, 5, 2, 7, 4),
    (7, (2, 5)): (2, 7, 4, 6, 1, 3, 5),
    (7, (3, 6)): (6, 1, 4, 2, 7, 5, 3),
    (7, (2, 6)): (2, 4, 7, 5, 3, 1, 6),
    (7, (3, 5)): (3, 1, 6, 4, 2, 7, 5),
    (8, (2, 3)): (2, 5, 7, 4, 1, 6, 8, 3),
    (8, (6, 7)): (7, 4, 2, 5, 8, 3, 1, 6),
    (8, (2, 4)): (2, 7, 5, 3, 8, 6, 1, 4),
    (8, (5, 7)): (7, 2, 4, 6, 1, 3, 8, 5),
    (8, (2, 5)): (2, 7, 4, 6, 1, 8, 3, 5),
    (8, (4, 7)): (7, 2, 5, 3, 8, 1, 6, 4),
    (8, (2, 6)): (2, 4, 7, 5, 3, 1, 8, 6),
    (8, (3, 7)): (7, 5, 2, 4, 6, 8, 1, 3),
    (8, (2, 7)): (2, 4, 1, 3, 6, 8, 5, 7),
    (8, (3, 4)): (3, 6, 1, 8, 5, 2, 7, 4),
    (8, (5, 6)): (6, 3, 8, 1, 4, 7, 2, 5),
    (8, (3, 5)): (3, 1, 8, 6, 4, 2, 7, 5),
    (8, (4, 6)): (6, 8, 1, 3, 5, 7, 2, 4),
    (8, (3, 6)): (3, 1, 4, 2, 7, 5, 8, 6),
}

# Pairs of keys whose rows mirror each other under the complement map.
SMALL_ORDER_MIRRORS: tuple[tuple[tuple[int, tuple[int, int]], tuple[int, tuple[int, int]]], ...] = (
    ((5, (1, 3)), (5, (3, 5))),
    ((5, (1, 4)), (5, (2, 5))),
    ((6, (2, 4)), (6, (3, 5))),
    ((7, (2, 3)), (7, (5, 6))),
    ((7, (2, 4)), (7, (4, 6))),
    ((7, (2, 5)), (7, (3, 6))),
    ((8, (2, 3)), (8, (6, 7))),
    ((8, (2, 4)), (8, (5, 7))),
    ((8, (2, 5)), (8, (4, 7))),
    ((8, (2, 6)), (8, (3, 7))),
    ((8, (3, 4)), (8, (5, 6))),
    ((8, (3, 5)), (8, (4, 6))),
)

# Order 9 rows for the low-low endpoint patterns whose generic form needs one
# more vertex of slack.

SPECIAL_ORDER9: dict[tuple[int, int], tuple[int, ...]] = {
    (4, 5): (4, 1, 3, 8, 6, 9, 7, 2, 5),
    (4, 6): (4, 1, 3, 8, 5, 2, 7, 9, 6),
    (3, 6): (3, 1, 4, 2, 9, 7, 5, 8, 6),
    (2, 6): (2, 4, 1, 3, 8, 5, 7, 9, 6),
}

# The split at vertex 6 needs at least six vertices on the right (five when
# the residual far endpoint is 3 or 4 away from the window start).  These six
# pairs at orders 9 and 10 have no room for it; their rows are explicit.

BRIDGE_PATCH: dict[tuple[int, int, int], tuple[int, ...]] = {
    (9, 2, 7): (2, 9, 6, 4, 1, 3, 8, 5, 7),
    (9, 3, 7): (3, 1, 4, 2, 9, 6, 8, 5, 7),
    (9, 2, 8): (2, 9, 7, 5, 3, 1, 4, 6, 8),
    (10, 2, 7): (2, 9, 4, 6, 1, 3, 8, 10, 5, 7),
    (10, 3, 7): (3, 1, 4, 2, 9, 6, 8, 10, 5, 7),
    (10, 4, 7): (4, 2, 9, 6, 1, 3, 8, 10, 5, 7),
}


# ---------------------------------------------------------------------------
# Sequence helpers (plain tuples; wrapping into witnesses happens at the
# public surface, where the result is verified).


def _sh(seq: tuple[int, ...], k: int) -> tuple[int, ...]:
    return tuple(v + k for v in seq)


def _rev(seq: tuple[int, ...]) -> tuple[int, ...]:
    return seq[::-1]


@lru_cache(maxsize=None)
def _seed_1m(n: int, m: int) -> tuple[int, ...]:
    """Hamilton path of [1, n] from 1 to m for m in [2, 6]."""
    if (n, m) in BASE_SEEDS:
        return BASE_SEEDS[n, m]
    if m == 2 and n >= 8:
        # Wrapping 1 ... 2 around the order-(n-2) path, unrolled: odd ramp,
        # shifted seed, even ramp back down.
        seed = BASE_SEEDS[6 if n % 2 == 0 else 7, 2]
        k = (n - len(seed)) // 2
        return (
            tuple(range(1, 2 * k, 2))
            + _sh(seed, 2 * k)
            + tuple(range(2 * k, 1, -2))
        )
    if m == 3 and n >= 10:
        return (1, 4, 2) + _sh(_seed_1m(n - 4, 2), 4) + (3,)
    if m == 4 and n >= 9:
        return (1, 3) + _sh(_seed_1m(n - 4, 3), 4) + (2, 4)
    if m == 5 and n >= 11:
        return (1, 3) + _sh(_seed_1m(n - 5, 4), 5) + (4, 2, 5)
    if m == 6 and n >= 11:
        return (1, 3, 5, 2, 4) + _rev(_sh(_seed_1m(n - 5, 2), 5))
    raise ValueError(f"no base path for (n={n}, m={m})")


@lru_cache(maxsize=None)
def _path_1m(n: int, m: int) -> tuple[int, ...]:
    """Hamilton path of [1, n] from 1 to m, any 2 <= m <= n (n >= 5)."""
    if not 2 <= m <= n:
        raise ValueError(f"need 2 <= m <= n, got m={m}, n={n}")
    if n < 5:
        raise ValueError(f"order {n} below the supported range")
    if n == 5:
        if m in (3, 4):
            return BASE_SEEDS[5, m]
        raise Infeasible(f"no Hamilton path from 1 to {m} at order 5", n=5, endpoints=(1, m))
    if m <= 6:
        return _seed_1m(n, m)
    if n <= 10:
        return INIT_1M[n, m]
    # Chain five-vertex steps 1 -> 6 -> 11 -> ... and finish with one residual
    # segment; q is chosen so the residual is either a base far endpoint
    # (m - 5q <= 6) or one of the tabulated order-7..10 rows.
    q = min((n - 6) // 5, (m - 2) // 5)
    link = _seed_1m(6, 6)
    seq: list[int] = list(link)
    for j in range(1, q):
        seq.extend(_sh(link, 5 * j)[1:])
    seq.extend(_sh(_path_1m(n - 5 * q, m - 5 * q), 5 * q)[1:])
    return tuple(seq)


def _complement_seq(seq: tuple[int, ...], n: int) -> tuple[int, ...]:
    t = n + 1
    return tuple(t - v for v in seq)


def _small_seq(n: int, a: int, b: int) -> tuple[int, ...]:
    """Orders 5..8, 1 <= a < b <= n, from the tables."""
    if (a, b) in EXCEPTION_PAIRS[n]:
        raise Infeasible(
            f"no Hamilton path between {a} and {b} at order {n}",
            n=n,
            endpoints=(a, b),
        )
    if a == 1:
        return _path_1m(n, b)
    if b == n:
        return _rev(_complement_seq(_path_1m(n, n + 1 - a), n))
    row = SMALL_ORDER_ROWS[n, (a, b)]
    return row if row[0] == a else _rev(row)


def _ham_seq(n: int, a: int, b: int) -> tuple[int, ...]:
    """Hamilton path sequence of [1, n] from a to b, 1 <= a < b <= n."""
    if n <= 8:
        return _small_seq(n, a, b)
    if a > n + 1 - b:
        # Mirror into the half where the left endpoint is the tighter one.
        return _rev(_complement_seq(_ham_seq(n, n + 1 - b, n + 1 - a), n))
    if a == 1:
        return _path_1m(n, b)
    if a >= 6:
        # Cover [1, a] ending next to a+1, then the rest.
        left = _complement_seq(_path_1m(a, 2), a)  # a -> a-1
        if b == a + 1:
            right = _rev(_sh(_path_1m(n - a, 2), a))  # a+2 -> a+1
        else:
            right = _sh(_path_1m(n - a, b - a), a)  # a+1 -> b
        return left + right
    if b >= 7:
        # Split at vertex 6: cover [1, 6] from a to 6, then [6, n] from 6 to b.
        r = n - 5
        if r >= 6 or (r == 5 and b - 5 in (3, 4)):
            left = _rev(_complement_seq(_path_1m(6, 7 - a), 6))  # a -> 6
            right = _sh(_path_1m(r, b - 5), 5)  # 6 -> b
            return left + right[1:]
        return BRIDGE_PATCH[n, a, b]
    # 2 <= a < b <= 6: fixed prefixes around one long interior segment.
    if n == 9 and (a, b) in SPECIAL_ORDER9:
        return SPECIAL_ORDER9[a, b]
    if (a, b) == (2, 3):
        return (2,) + _sh(_path_1m(n - 3, 3), 3) + (1, 3)
    if (a, b) == (2, 4):
        return (2,) + _sh(_path_1m(n - 4, 4), 4) + (3, 1, 4)
    if (a, b) == (2, 5):
        return (2, 4, 1, 3) + _rev(_sh(_path_1m(n - 4, 4), 4))
    if (a, b) == (2, 6):
        return (2, 4, 1, 3, 5) + _rev(_sh(_path_1m(n - 5, 3), 5))
    if (a, b) == (3, 4):
        return (3, 1) + _rev(_sh(_path_1m(n - 4, 4), 4)) + (2, 4)
    if (a, b) == (3, 5):
        return (3, 1, 4, 2) + _rev(_sh(_path_1m(n - 4, 3), 4))
    if (a, b) == (3, 6):
        return (3, 1, 4, 2) + _sh(_path_1m(n - 4, 2), 4)
    if (a, b) == (4, 5):
        return (4, 1, 3) + _sh(_path_1m(n - 5, 4), 5) + (2, 5)
    if (a, b) == (4, 6):
        return (4, 1, 3, 5, 2) + _rev(_sh(_path_1m(n - 5, 4), 5))
    if (a, b) == (5, 6):
        return (5, 2, 4, 1, 3) + _rev(_sh(_path_1m(n - 5, 3), 5))
    raise AssertionError(f"unhandled endpoint pair ({a}, {b}) at order {n}")


# ---------------------------------------------------------------------------
# Public constructors.


def _checked_path(n: int, seq: tuple[int, ...], a: int, b: int) -> PathWitness:
    w = PathWitness(Interval(1, n), seq)
    v = verify_path(w, (a, b))
    if not v:
        raise ConstructionError(f"path self-check failed: {v.reason} {v.detail}")
    return w


def _checked_cycle(n: int, seq: tuple[int, ...], **constraints) -> CycleWitness:
    w = CycleWitness(Interval(1, n), seq)
    v = verify_cycle(w, **constraints)
    if not v:
        raise ConstructionError(f"cycle self-check failed: {v.reason} {v.detail}")
    return w


def base_path_1_to_m(n: int, m: int) -> PathWitness:
    """Hamilton path of [1, n] from 1 to m for the base range m in [2, 6]."""
    if not 2 <= m <= 6:
        raise ValueError(f"base construction covers m in [2, 6], got {m}")
    seq = _seed_1m(n, m)
    return _checked_path(n, seq, 1, m)


def path_1_to_m(n: int, m: int) -> PathWitness:
    """Hamilton path of [1, n] from 1 to m, for any 2 <= m <= n (n >= 5).

    At order 5 only m in {3, 4} is realizable; other m raise Infeasible.
    """
    seq = _path_1m(n, m)
    return _checked_path(n, seq, 1, m)


def hamilton_path(n: int, a: int, b: int) -> PathWitness:
    """Hamilton path of [1, n] from a to b.

    Raises Infeasible exactly for the tabulated small-order exception pairs
    (orders 5 through 8); every pair is realizable from order 9 on.
    """
    if n < 5:
        raise ValueError(f"order {n} below the supported range (n >= 5)")
    if not (1 <= a <= n and 1 <= b <= n) or a == b:
        raise ValueError(f"bad endpoints ({a}, {b}) for order {n}")
    seq = _ham_seq(n, min(a, b), max(a, b))
    if a > b:
        seq = _rev(seq)
    return _checked_path(n, seq, a, b)


def infeasible_pairs(n: int) -> frozenset[tuple[int, int]]:
    """Endpoint pairs (a < b) the constructor reports as having no path."""
    if n < 5:
        raise ValueError(f"order {n} below the supported range (n >= 5)")
    out = set()
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            try:
                _ham_seq(n, a, b)
            except Infeasible:
                out.add((a, b))
    return frozenset(out)


def hamilton_cycle(n: int) -> CycleWitness:
    """Hamilton cycle of [1, n] for n >= 5; below that none exists."""
    if n < 1:
        raise ValueError("order must be positive")
    if n < 5:
        raise Infeasible(f"no Hamilton cycle at order {n}", n=n)
    # A 1 -> 4 path closes with the prime difference 3.
    return _checked_cycle(n, _path_1m(n, 4))


def hamilton_cycle_through_edge(n: int, edge) -> CycleWitness:
    """Hamilton cycle of [1, n] through the given prime-difference edge."""
    if n < 5:
        raise ValueError(f"order {n} below the supported range (n >= 5)")
    a, b = edge
    if not (1 <= a <= n and 1 <= b <= n) or a == b:
        raise ValueError(f"bad edge ({a}, {b}) for order {n}")
    if not is_prime(abs(a - b)):
        raise NonEdge(f"|{a} - {b}| = {abs(a - b)} is not prime")
    # A Hamilton path between the edge's ends closes through that edge; no
    # prime-difference pair is among the small-order exceptions.
    seq = _ham_seq(n, min(a, b), max(a, b))
    return _checked_cycle(n, seq, required_edge=(a, b))
