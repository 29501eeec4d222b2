"""2-factor realization: partition [1, n] into cycles of prescribed lengths.

Any multiset of parts >= 3 summing to n >= 7 is realizable (orders 5 and 6
only admit the single full cycle).  The realization peels fixed blocks off
the low end of the interval: small combinations come from hand tables, a
single long part comes from a Hamilton cycle, and mixed multisets reduce by
one tabulated prefix block per step, ordered so that no step strands a
remainder with no block of its own.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator

from .errors import ConstructionError, Infeasible
from .graphs import Interval, TwoFactorWitness, verify_two_factor
from .paths import hamilton_cycle, path_1_to_m

# ---------------------------------------------------------------------------
# Fixed blocks on [1, size].  Each entry lists cycles covering the interval
# exactly.  Names give the length multiset.

_TWO_C4 = ((1, 3, 8, 6), (2, 5, 7, 4))
_THREE_C4 = ((1, 3, 10, 8), (2, 5, 12, 7), (9, 11, 6, 4))
_C3_C4 = ((1, 3, 6), (2, 5, 7, 4))
_C3_2C4 = ((1, 3, 8), (4, 6, 9, 11), (2, 5, 10, 7))
_TWO_C3_C4 = ((1, 3, 8), (4, 6, 9), (2, 5, 10, 7))
_TWO_C3_C5 = ((1, 3, 8), (5, 10, 7), (2, 9, 11, 6, 4))
_THREE_C3 = ((1, 3, 8), (2, 5, 7), (4, 6, 9))
_FOUR_C3 = ((1, 3, 8), (2, 7, 9), (4, 6, 11), (5, 10, 12))
_THREE_C3_C4 = ((1, 3, 8), (2, 7, 9), (5, 10, 12), (4, 6, 13, 11))
_FIVE_C3 = ((1, 3, 6), (2, 4, 15), (5, 7, 10), (8, 11, 13), (9, 12, 14))

_C3_WITH: dict[int, tuple[tuple[int, ...], ...]] = {
    4: _C3_C4,
    5: ((2, 5, 7), (1, 3, 8, 6, 4)),
    6: ((1, 3, 8), (2, 5, 7, 9, 6, 4)),
    7: ((1, 3, 8), (2, 5, 10, 7, 9, 6, 4)),
    8: ((1, 3, 8), (2, 5, 10, 7, 9, 11, 6, 4)),
}

_C4_WITH: dict[int, tuple[tuple[int, ...], ...]] = {
    5: ((1, 3, 8, 6), (2, 5, 7, 9, 4)),
    6: ((1, 3, 8, 6), (2, 5, 10, 7, 9, 4)),
    7: ((1, 3, 8, 6), (2, 5, 10, 7, 9, 11, 4)),
    8: ((1, 3, 8, 6), (2, 5, 10, 7, 12, 9, 11, 4)),
}


def _c3_with(big: int) -> tuple[tuple[int, ...], ...]:
    """{3, big} on [1, 3 + big]."""
    if big in _C3_WITH:
        return _C3_WITH[big]
    # big >= 9: triangle on {1, 3, 6}, the long cycle threads the rest via a
    # 7 -> 8 Hamilton path of [7, 3 + big] closed through 5 and wrapped back
    # to 2 and 4 (differences 2, 3, and 8 - 5 = 3).
    inner = tuple(v + 6 for v in path_1_to_m(big - 3, 2).sequence)
    return ((1, 3, 6), (5, 2, 4) + inner)


def _c4_with(big: int) -> tuple[tuple[int, ...], ...]:
    """{4, big} on [1, 4 + big]."""
    if big in _C4_WITH:
        return _C4_WITH[big]
    n = 4 + big
    inner = tuple(v + 7 for v in path_1_to_m(n - 7, 2).sequence)
    return ((2, 5, 7, 4), (6, 1, 3) + inner)


def _two_c3_with(big: int) -> tuple[tuple[int, ...], ...]:
    """{3, 3, big} on [1, 6 + big]."""
    if big == 4:
        return _TWO_C3_C4
    if big == 5:
        return _TWO_C3_C5
    n = 6 + big
    inner = tuple(v + 7 for v in path_1_to_m(n - 7, 3).sequence)
    return ((1, 3, 6), (2, 4, 7), (5,) + inner)


def _schedule_threes(m: int) -> list[tuple[tuple[int, ...], ...]]:
    """All parts equal to 3: a list of fixed blocks whose 3-counts sum to m."""
    blocks: list[tuple[tuple[int, ...], ...]] = []
    if m == 5:
        return [_FIVE_C3]
    if m % 3 == 1:
        blocks.append(_FOUR_C3)
        m -= 4
    elif m % 3 == 2:
        # m >= 8 here (m == 5 handled above, m == 2 is infeasible).
        blocks.append(_FOUR_C3)
        blocks.append(_FOUR_C3)
        m -= 8
    blocks.extend(_THREE_C3 for _ in range(m // 3))
    return blocks


# ---------------------------------------------------------------------------


def enumerate_specs(n: int, max_parts: int | None = None) -> Iterator[tuple[int, ...]]:
    """All multisets of parts >= 3 summing to n, ascending within each.

    Ordered by part count, then lexicographically.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")

    def ascending(total: int, k: int, low: int) -> Iterator[tuple[int, ...]]:
        if k == 1:
            if total >= low:
                yield (total,)
            return
        for first in range(low, total // k + 1):
            for rest in ascending(total - first, k - 1, first):
                yield (first, *rest)

    top = n // 3
    if max_parts is not None:
        top = min(top, max_parts)
    for k in range(1, top + 1):
        yield from ascending(n, k, 3)


def _validate_spec(n: int, lengths: Iterable[int]) -> tuple[int, ...]:
    parts = tuple(sorted(lengths))
    if not parts:
        raise Infeasible("empty length multiset", n=n)
    if any(p < 3 for p in parts):
        raise Infeasible(f"cycle lengths must be at least 3, got {min(parts)}", n=n, lengths=parts)
    if sum(parts) != n:
        raise Infeasible(f"lengths sum to {sum(parts)}, need {n}", n=n, lengths=parts)
    return parts


def _realize(n: int, parts: tuple[int, ...]) -> list[tuple[int, ...]]:
    counts = Counter(parts)
    threes = counts.pop(3, 0)
    fours = counts.pop(4, 0)
    big = sorted(counts.elements())

    cycles: list[tuple[int, ...]] = []
    lo = 1

    def place(block: Iterable[tuple[int, ...]]) -> None:
        """Shift a block built on [1, size] up to start at lo."""
        nonlocal lo
        shift = lo - 1
        size = 0
        for cyc in block:
            cycles.append(tuple(v + shift for v in cyc))
            size += len(cyc)
        lo += size

    while threes or fours or big:
        if threes == 0:
            if fours == 0:
                # Long parts only (all >= 5): each spans its own subinterval.
                place((tuple(hamilton_cycle(big.pop(0)).sequence),))
                continue
            if fours >= 2:
                if fours == 3 and not big:
                    place(_THREE_C4)
                    fours = 0
                else:
                    place(_TWO_C4)
                    fours -= 2
                continue
            # Exactly one 4: pair it with a long part (one exists, since a
            # lone {4} never reaches here: sum >= 7 forces company).
            place(_c4_with(big.pop(0)))
            fours = 0
            continue
        if threes == 1:
            if fours == 2 and not big:
                place(_C3_2C4)
                fours = 0
            elif fours >= 1:
                place(_c3_with(4))
                fours -= 1
            else:
                place(_c3_with(big.pop(0)))
            threes = 0
            continue
        if threes == 2:
            if fours == 1 and not big:
                place(_TWO_C3_C4)
                fours = 0
                threes = 0
            elif fours == 0 and len(big) == 1:
                place(_two_c3_with(big.pop(0)))
                threes = 0
            else:
                # Peel one 3 with the smallest non-3 part; what remains still
                # has a non-3 companion for the second 3.
                if fours:
                    place(_c3_with(4))
                    fours -= 1
                else:
                    place(_c3_with(big.pop(0)))
                threes = 1
            continue
        # threes >= 3
        nonthree = fours + len(big)
        if nonthree == 0:
            for block in _schedule_threes(threes):
                place(block)
            threes = 0
            continue
        if nonthree == 1 and threes == 3:
            if fours:
                place(_THREE_C3_C4)
                fours = 0
            else:
                place(_THREE_C3)
                place((tuple(hamilton_cycle(big.pop(0)).sequence),))
            threes = 0
            continue
        if fours:
            place(_c3_with(4))
            fours -= 1
        else:
            place(_c3_with(big.pop(0)))
        threes -= 1

    return cycles


def two_factor(n: int, lengths: Iterable[int]) -> TwoFactorWitness:
    """Partition [1, n] into prime-difference cycles of the given lengths.

    Realizable for every valid multiset once n >= 7; orders 5 and 6 admit
    only the single Hamilton cycle, and below 5 nothing at all.
    """
    parts = _validate_spec(n, lengths)
    if n < 5:
        raise Infeasible(f"no 2-factor at order {n}", n=n)
    if len(parts) == 1:
        cycles = [tuple(hamilton_cycle(n).sequence)]
    elif n <= 6:
        raise Infeasible(
            f"order {n} admits only the single full cycle", n=n, lengths=parts
        )
    else:
        cycles = _realize(n, parts)

    w = TwoFactorWitness(Interval(1, n), tuple(cycles))
    v = verify_two_factor(w, expected_lengths=parts)
    if not v:
        raise ConstructionError(f"2-factor self-check failed: {v.reason} {v.detail}")
    return w
