"""Interval symmetries acting on witnesses.

Complement mirrors an interval onto itself (v -> lo + hi - v), shift moves it
(v -> v + k), both preserving all differences; reversal flips traversal
order.  They act on whole witnesses so interval bookkeeping travels with the
vertices.
"""

from __future__ import annotations

from .graphs import CycleWitness, Interval, PathWitness

_SEQ_TYPES = (PathWitness, CycleWitness)


def _rebuild(w, interval: Interval, seq: tuple[int, ...]):
    return type(w)(interval, seq)


def complement(w):
    """Mirror the witness across its interval midpoint; validity is preserved."""
    if not isinstance(w, _SEQ_TYPES):
        raise TypeError(f"cannot complement {type(w).__name__}")
    t = w.interval.lo + w.interval.hi
    return _rebuild(w, w.interval, tuple(t - v for v in w.sequence))


def shift(w, k: int):
    """Translate the witness by k; the new interval must stay at or above 1."""
    if not isinstance(w, _SEQ_TYPES):
        raise TypeError(f"cannot shift {type(w).__name__}")
    if w.interval.lo + k < 1:
        raise ValueError(f"shift by {k} drops below vertex 1")
    interval = Interval(w.interval.lo + k, w.interval.hi + k)
    return _rebuild(w, interval, tuple(v + k for v in w.sequence))


def reverse(w):
    """Traverse the witness backwards; endpoints swap, edges are unchanged."""
    if not isinstance(w, _SEQ_TYPES):
        raise TypeError(f"cannot reverse {type(w).__name__}")
    return _rebuild(w, w.interval, tuple(reversed(w.sequence)))
