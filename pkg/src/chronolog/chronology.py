"""Timelines, fuzzy events and the temporal relationship algebra.

An event is a fuzzy set over a timeline of named, pairwise disjoint
intervals: each interval id maps to the possibility in (0, 1] that the
event occurs there.  Possibility 0 is represented by absence, so the
stored key set of an event is always exactly its support.

Everything here is immutable after construction and every operation is a
pure function, so values can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isfinite
from typing import Iterable, Iterator, Mapping

from .errors import (
    DuplicateIntervalId,
    EmptyInterval,
    OverlappingIntervals,
    SubsetNotInSupport,
    TimelineMismatch,
    UndefinedIntersection,
    UnknownInterval,
)

# Tolerance used only by same_time; all other arithmetic is min/max.
SAME_TIME_EPS = 1e-9


@dataclass(frozen=True)
class Interval:
    """A named time interval with finite, strictly increasing endpoints."""

    id: str
    start: float
    end: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "start", float(self.start))
        object.__setattr__(self, "end", float(self.end))
        if not (isfinite(self.start) and isfinite(self.end)):
            raise ValueError(f"interval {self.id!r} has a non-finite endpoint")
        if not self.start < self.end:
            raise EmptyInterval(
                f"interval {self.id!r} is empty: start {self.start} >= end {self.end}"
            )

    @property
    def duration(self) -> float:
        return self.end - self.start


class Timeline:
    """An ordered collection of pairwise disjoint intervals.

    Intervals are kept sorted by start time.  Disjointness allows touching
    endpoints: a preceding interval may end exactly where the next begins.
    """

    __slots__ = ("intervals", "_positions")

    def __init__(self, intervals: Iterable[Interval]):
        ordered = tuple(sorted(intervals, key=lambda iv: (iv.start, iv.end)))
        positions: dict[str, int] = {}
        for pos, iv in enumerate(ordered):
            if iv.id in positions:
                raise DuplicateIntervalId(f"interval id {iv.id!r} declared twice")
            positions[iv.id] = pos
        for prev, nxt in zip(ordered, ordered[1:]):
            if prev.end > nxt.start:
                raise OverlappingIntervals(
                    f"intervals {prev.id!r} and {nxt.id!r} overlap"
                )
        self.intervals = ordered
        self._positions = positions

    def interval(self, interval_id: str) -> Interval:
        return self.intervals[self.position(interval_id)]

    def position(self, interval_id: str) -> int:
        try:
            return self._positions[interval_id]
        except KeyError:
            raise UnknownInterval(f"unknown interval id {interval_id!r}") from None

    def duration(self, interval_id: str) -> float:
        return self.interval(interval_id).duration

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(iv.id for iv in self.intervals)

    def __contains__(self, interval_id: object) -> bool:
        return interval_id in self._positions

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Timeline):
            return NotImplemented
        return self.intervals == other.intervals

    def __repr__(self) -> str:
        inner = ", ".join(
            f"{iv.id} [{iv.start}, {iv.end})" for iv in self.intervals
        )
        return f"Timeline({inner})"


def build_timeline(specs: Iterable[tuple[str, float, float]]) -> Timeline:
    """Build a timeline from (id, start, end) triples."""
    return Timeline(Interval(i, s, e) for (i, s, e) in specs)


class Event:
    """A fuzzy set of timeline intervals: interval id -> possibility.

    Zero possibilities are never stored, so ``memberships.keys()`` is the
    support set.  Values outside [0, 1] are rejected, not clamped.
    Memberships iterate in timeline order, which keeps printing and
    duration sums deterministic.
    """

    __slots__ = ("timeline", "memberships")

    def __init__(self, timeline: Timeline, memberships: Mapping[str, float]):
        cleaned: dict[str, float] = {}
        for interval_id, raw in memberships.items():
            if interval_id not in timeline:
                raise UnknownInterval(f"unknown interval id {interval_id!r}")
            degree = float(raw)
            if not 0.0 <= degree <= 1.0:
                raise ValueError(
                    f"possibility for {interval_id!r} outside [0, 1]: {raw!r}"
                )
            if degree > 0.0:
                cleaned[interval_id] = degree
        self.timeline = timeline
        self.memberships = {
            iv.id: cleaned[iv.id] for iv in timeline if iv.id in cleaned
        }

    def possibility(self, interval_id: str) -> float:
        """Possibility that the event occurs in the given interval."""
        if interval_id not in self.timeline:
            raise UnknownInterval(f"unknown interval id {interval_id!r}")
        return self.memberships.get(interval_id, 0.0)

    def support(self) -> frozenset[str]:
        """Ids of the intervals where occurrence is possible at all."""
        return frozenset(self.memberships)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Event):
            return NotImplemented
        return self.timeline == other.timeline and self.memberships == other.memberships

    def __repr__(self) -> str:
        inner = ", ".join(f"{i}: {mu}" for i, mu in self.memberships.items())
        return f"Event({{{inner}}})"


def interval_precedes(timeline: Timeline, first: str, second: str) -> bool:
    """True when ``first`` is over by the time ``second`` starts.

    Distinct disjoint intervals may share a boundary point, so a touching
    endpoint still counts as precedence.  Never true for an interval and
    itself.
    """
    a = timeline.interval(first)
    b = timeline.interval(second)
    return first != second and a.end <= b.start


def interval_meets(timeline: Timeline, first: str, second: str) -> bool:
    """True when ``second`` is the next declared interval after ``first``.

    Directional, and adjacency is in declared order: a temporal gap with no
    declared interval inside it does not break the relation.
    """
    return timeline.position(second) == timeline.position(first) + 1


def _shared_timeline(e1: Event, e2: Event) -> Timeline:
    if e1.timeline != e2.timeline:
        raise TimelineMismatch("events are defined over different timelines")
    return e1.timeline


def _best_pair(e1: Event, e2: Event, related) -> float:
    # max-min over support pairs; max over the empty set is 0
    best = 0.0
    for i, mu1 in e1.memberships.items():
        for j, mu2 in e2.memberships.items():
            if related(i, j):
                best = max(best, min(mu1, mu2))
    return best


def before(e1: Event, e2: Event) -> float:
    """Degree to which ``e1`` precedes ``e2``."""
    t = _shared_timeline(e1, e2)
    return _best_pair(e1, e2, lambda i, j: interval_precedes(t, i, j))


def after(e1: Event, e2: Event) -> float:
    """Degree to which ``e1`` follows ``e2``."""
    t = _shared_timeline(e1, e2)
    return _best_pair(e1, e2, lambda i, j: interval_precedes(t, j, i))


def overlap(e1: Event, e2: Event) -> float:
    """Degree to which ``e1`` and ``e2`` occur in a common interval."""
    _shared_timeline(e1, e2)
    best = 0.0
    for i, mu1 in e1.memberships.items():
        mu2 = e2.memberships.get(i)
        if mu2 is not None:
            best = max(best, min(mu1, mu2))
    return best


def meet(e1: Event, e2: Event) -> float:
    """Degree to which ``e1`` immediately precedes ``e2``."""
    t = _shared_timeline(e1, e2)
    return _best_pair(e1, e2, lambda i, j: interval_meets(t, i, j))


def same_time(e1: Event, e2: Event) -> float:
    """1 when the events are temporally equivalent, else 0.

    Equivalence is equality of supports plus pointwise agreement of the
    possibilities within SAME_TIME_EPS.
    """
    _shared_timeline(e1, e2)
    if e1.support() != e2.support():
        return 0.0
    for i, mu1 in e1.memberships.items():
        if abs(mu1 - e2.memberships[i]) > SAME_TIME_EPS:
            return 0.0
    return 1.0


def during(e1: Event, e2: Event) -> float:
    """1 when ``e1`` is pointwise dominated by ``e2`` on its support, else 0."""
    _shared_timeline(e1, e2)
    for i, mu1 in e1.memberships.items():
        if mu1 > e2.memberships.get(i, 0.0):
            return 0.0
    return 1.0


def complement(event: Event) -> Event:
    """Pointwise 1 - possibility over the whole timeline, not just the support.

    Intervals outside the support come back with possibility 1; intervals
    where the result is 0 are dropped by the Event constructor.
    """
    flipped = {
        iv.id: 1.0 - event.memberships.get(iv.id, 0.0) for iv in event.timeline
    }
    return Event(event.timeline, flipped)


def intersect(e1: Event, e2: Event) -> Event:
    """Pointwise min over the common support.

    Undefined (an error, not an empty event) when the supports are
    disjoint.
    """
    _shared_timeline(e1, e2)
    common = {
        i: min(mu1, e2.memberships[i])
        for i, mu1 in e1.memberships.items()
        if i in e2.memberships
    }
    if not common:
        raise UndefinedIntersection("events have disjoint supports")
    return Event(e1.timeline, common)


def union(e1: Event, e2: Event) -> Event:
    """Pointwise max over the united supports."""
    t = _shared_timeline(e1, e2)
    merged: dict[str, float] = {}
    for iv in t:
        mu = max(e1.memberships.get(iv.id, 0.0), e2.memberships.get(iv.id, 0.0))
        if mu > 0.0:
            merged[iv.id] = mu
    return Event(t, merged)


def weighted_duration(event: Event, interval_ids: Iterable[str]) -> float:
    """Sum of interval length times possibility over ``interval_ids``.

    The ids must lie inside the event's support.  Summation runs in
    timeline order so results are reproducible.
    """
    wanted = set(interval_ids)
    missing = wanted - set(event.memberships)
    if missing:
        raise SubsetNotInSupport(
            f"intervals outside the event support: {sorted(missing)}"
        )
    return sum(
        event.timeline.duration(i) * mu
        for i, mu in event.memberships.items()
        if i in wanted
    )
