"""Primality queries, prime pair decompositions, and prime progressions.

A single module-level sieve backs all queries and grows on demand, so callers
never size it up front.  `PrimeTable` is the fixed-size value type for code
that wants an explicit, bounded table.
"""

from __future__ import annotations

import threading
from math import isqrt


def _sieve_flags(limit: int) -> bytearray:
    """Byte flags for 0..limit, flag[k] == 1 iff k is prime."""
    flags = bytearray(limit + 1)
    if limit >= 2:
        flags[2:] = b"\x01" * (limit - 1)
        for p in range(2, isqrt(limit) + 1):
            if flags[p]:
                flags[p * p :: p] = b"\x00" * ((limit - p * p) // p + 1)
    return flags


class PrimeTable:
    """Sieve of Eratosthenes over [0, limit], fixed at construction.

    Queries outside the table are refused rather than silently wrong.
    """

    __slots__ = ("limit", "_flags")

    def __init__(self, limit: int):
        if limit < 1:
            raise ValueError("limit must be >= 1")
        self.limit = limit
        self._flags = _sieve_flags(limit)

    def is_prime(self, k: int) -> bool:
        if not 0 <= k <= self.limit:
            raise ValueError(f"{k} outside table range [0, {self.limit}]")
        return bool(self._flags[k])

    def primes(self) -> list[int]:
        return [k for k in range(2, self.limit + 1) if self._flags[k]]

    def __contains__(self, k: object) -> bool:
        return isinstance(k, int) and 0 <= k <= self.limit and bool(self._flags[k])


def sieve(limit: int) -> PrimeTable:
    """Build a fixed prime table covering [2, limit]."""
    return PrimeTable(limit)


_lock = threading.Lock()
_flags = _sieve_flags(1 << 10)


def _ensure(limit: int) -> None:
    """Grow the shared sieve to cover `limit`; doubling keeps it amortized."""
    global _flags
    if limit < len(_flags):
        return
    with _lock:
        if limit < len(_flags):
            return
        _flags = _sieve_flags(max(limit, 2 * (len(_flags) - 1)))


def is_prime(k: int) -> bool:
    """Primality against the shared sieve, growing it as needed."""
    if k < 2:
        return False
    _ensure(k)
    return bool(_flags[k])


def prime_flags(limit: int) -> bytearray:
    """Primality bitmap valid for indices 0..limit (treat as read-only).

    The buffer is replaced, never mutated, when the sieve grows, so a
    reference obtained here stays internally consistent.
    """
    _ensure(limit)
    return _flags


def prime_pair_decompositions(n: int) -> list[tuple[int, int]]:
    """All (p, q) with p < q, both prime, p + q = n, ascending in p.

    Equal parts are excluded: n = 2p contributes nothing.
    """
    if n < 1:
        raise ValueError("n must be positive")
    _ensure(n)
    flags = _flags
    return [
        (p, n - p)
        for p in range(2, (n - 1) // 2 + 1)
        if flags[p] and flags[n - p]
    ]


def prime_arithmetic_progression(k: int, search_limit: int) -> tuple[int, ...] | None:
    """Smallest k-term progression of primes with positive common difference.

    "Smallest" means lexicographically by (first term, difference).  Both the
    first term and the difference are capped by `search_limit`; term values may
    reach first + (k-1)*difference, and the sieve grows to cover them.  Returns
    None when the search box is exhausted.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if search_limit < 2:
        return None
    if k == 1:
        return (2,)
    _ensure(search_limit * k)
    flags = _flags
    for first in range(2, search_limit + 1):
        if not flags[first]:
            continue
        for d in range(1, search_limit + 1):
            if all(flags[first + j * d] for j in range(1, k)):
                return tuple(first + j * d for j in range(k))
    return None
