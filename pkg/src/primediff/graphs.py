"""Prime difference graphs over integer intervals: witnesses and verifiers.

The graph on an interval [lo, hi] joins two vertices exactly when they differ
by a prime.  A witness is an explicit vertex sequence whose claim (Hamilton
path, Hamilton cycle, or disjoint cycle cover) is checkable in linear time;
every constructor in this package re-checks its output with these verifiers
before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import primes

# Violation reason codes carried by failing verdicts.
NOT_PERMUTATION = "NotPermutation"
NON_PRIME_DIFFERENCE = "NonPrimeDifference"
WRONG_ENDPOINTS = "WrongEndpoints"
MISSING_REQUIRED_EDGE = "MissingRequiredEdge"
DISALLOWED_DIFFERENCE = "DisallowedDifference"
NOT_PARTITION = "NotPartition"
SHORT_CYCLE = "ShortCycle"
WRONG_LENGTH_MULTISET = "WrongLengthMultiset"
SHARED_EDGE = "SharedEdge"


def adjacent(u: int, v: int) -> bool:
    """Vertices are adjacent exactly when they differ by a prime."""
    return primes.is_prime(abs(u - v))


@dataclass(frozen=True)
class Interval:
    """Consecutive integers [lo, hi], the vertex set of one graph."""

    lo: int
    hi: int

    def __post_init__(self):
        if not 1 <= self.lo <= self.hi:
            raise ValueError(f"bad interval [{self.lo}, {self.hi}]")

    @property
    def order(self) -> int:
        return self.hi - self.lo + 1

    def vertices(self) -> range:
        return range(self.lo, self.hi + 1)


@dataclass(frozen=True)
class PathWitness:
    """A claimed Hamilton path of its interval."""

    interval: Interval
    sequence: tuple[int, ...]

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.sequence[0], self.sequence[-1])


@dataclass(frozen=True)
class CycleWitness:
    """A claimed Hamilton cycle; the wrap-around edge is implicit."""

    interval: Interval
    sequence: tuple[int, ...]

    def canonical(self) -> "CycleWitness":
        return CycleWitness(self.interval, canonical_cycle(self.sequence))


@dataclass(frozen=True)
class TwoFactorWitness:
    """Vertex-disjoint cycles claimed to cover the interval exactly.

    Individual cycles run over arbitrary subsets, not sub-intervals.
    """

    interval: Interval
    cycles: tuple[tuple[int, ...], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles))


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verification; falsy iff a violation was found."""

    ok: bool
    reason: str | None = None
    detail: dict | None = None

    def __bool__(self) -> bool:
        return self.ok


OK = Verdict(True)


def _fail(reason: str, **detail) -> Verdict:
    return Verdict(False, reason, detail or None)


def _is_permutation(seq: tuple[int, ...], lo: int, hi: int) -> bool:
    n = hi - lo + 1
    return (
        len(seq) == n
        and len(set(seq)) == n
        and min(seq) == lo
        and max(seq) == hi
    )


def verify_path(w: PathWitness, expected_endpoints: tuple[int, int] | None = None) -> Verdict:
    """Permutation of the interval, prime consecutive differences, endpoints."""
    seq = w.sequence
    lo, hi = w.interval.lo, w.interval.hi
    if not _is_permutation(seq, lo, hi):
        return _fail(NOT_PERMUTATION)
    flags = primes.prime_flags(hi - lo)
    for i, (a, b) in enumerate(zip(seq, seq[1:])):
        if not flags[abs(b - a)]:
            return _fail(NON_PRIME_DIFFERENCE, position=i, difference=abs(b - a))
    if expected_endpoints is not None:
        want = tuple(expected_endpoints)
        got = (seq[0], seq[-1])
        if got != want:
            return _fail(WRONG_ENDPOINTS, expected=want, actual=got)
    return OK


def verify_cycle(
    w: CycleWitness,
    required_edge: tuple[int, int] | frozenset | None = None,
    allowed_diffs: frozenset | set | None = None,
) -> Verdict:
    """As verify_path, closed cyclically; optional edge and difference constraints."""
    seq = w.sequence
    lo, hi = w.interval.lo, w.interval.hi
    if not _is_permutation(seq, lo, hi):
        return _fail(NOT_PERMUTATION)
    if len(seq) < 3:
        return _fail(SHORT_CYCLE, length=len(seq))
    flags = primes.prime_flags(hi - lo)
    for i, (a, b) in enumerate(zip(seq, seq[1:] + seq[:1])):
        d = abs(b - a)
        if not flags[d]:
            return _fail(NON_PRIME_DIFFERENCE, position=i, difference=d)
        if allowed_diffs is not None and d not in allowed_diffs:
            return _fail(DISALLOWED_DIFFERENCE, position=i, difference=d)
    if required_edge is not None:
        e = frozenset(required_edge)
        if e not in cycle_edges(seq):
            return _fail(MISSING_REQUIRED_EDGE, edge=tuple(sorted(e)))
    return OK


def verify_two_factor(w: TwoFactorWitness, expected_lengths=None) -> Verdict:
    """Disjoint prime-difference cycles of length >= 3 covering the interval."""
    lo, hi = w.interval.lo, w.interval.hi
    seen: set[int] = set()
    for idx, cyc in enumerate(w.cycles):
        if len(cyc) < 3:
            return _fail(SHORT_CYCLE, cycle=idx, length=len(cyc))
        s = set(cyc)
        if len(s) != len(cyc) or not s.isdisjoint(seen):
            return _fail(NOT_PARTITION, cycle=idx)
        seen |= s
    if len(seen) != hi - lo + 1 or (seen and (min(seen) != lo or max(seen) != hi)):
        return _fail(NOT_PARTITION)
    flags = primes.prime_flags(hi - lo)
    for idx, cyc in enumerate(w.cycles):
        for i, (a, b) in enumerate(zip(cyc, cyc[1:] + cyc[:1])):
            if not flags[abs(b - a)]:
                return _fail(NON_PRIME_DIFFERENCE, cycle=idx, position=i, difference=abs(b - a))
    if expected_lengths is not None:
        want = tuple(sorted(expected_lengths))
        got = w.lengths
        if got != want:
            return _fail(WRONG_LENGTH_MULTISET, expected=want, actual=got)
    return OK


def verify_edge_disjoint(cycles) -> Verdict:
    """No edge used by two of the given cycles (all over one interval)."""
    cycles = list(cycles)
    if len({(c.interval.lo, c.interval.hi) for c in cycles}) > 1:
        raise ValueError("cycles must share one interval")
    owner: dict[frozenset, int] = {}
    for idx, c in enumerate(cycles):
        for e in cycle_edges(c.sequence):
            if e in owner:
                return _fail(SHARED_EDGE, edge=tuple(sorted(e)), cycles=(owner[e], idx))
            owner[e] = idx
    return OK


def cycle_edges(seq: tuple[int, ...]) -> set[frozenset]:
    """Unordered vertex pairs consecutive in the cyclic sequence."""
    n = len(seq)
    return {frozenset((seq[i], seq[(i + 1) % n])) for i in range(n)}


def canonical_cycle(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate the minimum vertex first, then orient so the second vertex is
    the smaller of its two neighbors; cycle equality is equality of this form."""
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if len(rot) >= 3 and rot[-1] < rot[1]:
        rot = rot[:1] + tuple(reversed(rot[1:]))
    return rot


def witness_to_json(w) -> dict:
    """Stable JSON form: {"kind", "lo", "hi", "sequences"}."""
    if isinstance(w, PathWitness):
        kind, seqs = "path", [list(w.sequence)]
    elif isinstance(w, CycleWitness):
        kind, seqs = "cycle", [list(w.sequence)]
    elif isinstance(w, TwoFactorWitness):
        kind, seqs = "two_factor", [list(c) for c in w.cycles]
    else:
        raise TypeError(f"not a witness: {type(w).__name__}")
    return {"kind": kind, "lo": w.interval.lo, "hi": w.interval.hi, "sequences": seqs}


def witness_from_json(obj) -> PathWitness | CycleWitness | TwoFactorWitness:
    """Parse the schema above; malformed objects raise ValueError."""
    if not isinstance(obj, dict):
        raise ValueError("witness must be a JSON object")
    try:
        kind = obj["kind"]
        lo = obj["lo"]
        hi = obj["hi"]
        seqs = obj["sequences"]
    except KeyError as e:
        raise ValueError(f"witness missing field {e.args[0]!r}") from None
    if not (isinstance(lo, int) and isinstance(hi, int)):
        raise ValueError("lo and hi must be integers")
    if not isinstance(seqs, list) or not all(
        isinstance(s, list) and all(isinstance(v, int) for v in s) for s in seqs
    ):
        raise ValueError("sequences must be a list of integer lists")
    interval = Interval(lo, hi)
    if kind == "path":
        if len(seqs) != 1:
            raise ValueError("a path witness has exactly one sequence")
        return PathWitness(interval, tuple(seqs[0]))
    if kind == "cycle":
        if len(seqs) != 1:
            raise ValueError("a cycle witness has exactly one sequence")
        return CycleWitness(interval, tuple(seqs[0]))
    if kind == "two_factor":
        return TwoFactorWitness(interval, tuple(tuple(s) for s in seqs))
    raise ValueError(f"unknown witness kind {kind!r}")
