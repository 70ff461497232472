"""Window-parameterized properties decided in O(delta) compose/test calls.

A :class:`WindowAlgebra` packages a property of windows of a snapshot
sequence: snapshots lift to elements of some monoid-like carrier, adjacent
windows compose, and a window passes iff ``test`` accepts its composite.
Two monotonicity directions are supported:

* ``grow``: a passing window keeps passing when extended (reachability-style
  properties).  ``extremal`` returns the smallest r such that every window
  of length r passes.
* ``shrink``: a passing window keeps passing when shrunk (intersection-style
  properties).  ``extremal`` returns the largest such r.

Both ``decide`` (fixed r) and ``extremal`` slide a two-stack aggregation
over the sequence, so the number of compose plus test calls stays linear:
at most 6*delta for decide and 10*delta for extremal, which the returned
operation counts let callers audit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .core import SnapshotSequence, StaticGraph
from .errors import InputError, RangeError
from .closure import RoundTripClosure, concat_roundtrip, is_roundtrip_connected, roundtrip_lift

DIRECTIONS = ("grow", "shrink")


@dataclass(frozen=True)
class WindowAlgebra:
    """lift(index, snapshot) -> element; compose is associative over adjacent runs."""

    lift: Callable[[int, StaticGraph], object]
    compose: Callable[[object, object], object]
    test: Callable[[object], bool]
    direction: str

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise InputError(f"direction must be one of {DIRECTIONS}")


@dataclass(frozen=True)
class DecideResult:
    value: bool
    ops: dict[str, int]


@dataclass(frozen=True)
class HierarchyResult:
    value: Optional[int]
    ops: dict[str, int]


class _Swag:
    """Queue with running composition (two-stack sliding-window aggregation)."""

    def __init__(self, compose):
        self._compose = compose
        self._front: list = []  # (element, element composed with everything above)
        self._back: list = []  # (element, everything below composed with element)

    def push(self, x):
        agg = self._compose(self._back[-1][1], x) if self._back else x
        self._back.append((x, agg))

    def pop(self):
        if not self._front:
            while self._back:
                x, _ = self._back.pop()
                agg = self._compose(x, self._front[-1][1]) if self._front else x
                self._front.append((x, agg))
        self._front.pop()

    def aggregate(self):
        if self._front and self._back:
            return self._compose(self._front[-1][1], self._back[-1][1])
        if self._front:
            return self._front[-1][1]
        if self._back:
            return self._back[-1][1]
        raise AssertionError("aggregate of an empty window")


class _Counted:
    def __init__(self, algebra: WindowAlgebra):
        self.ops = {"compose": 0, "test": 0}
        self._algebra = algebra

    def compose(self, a, b):
        self.ops["compose"] += 1
        return self._algebra.compose(a, b)

    def test(self, x) -> bool:
        self.ops["test"] += 1
        return self._algebra.test(x)


def decide(algebra: WindowAlgebra, seq: SnapshotSequence, r: int) -> DecideResult:
    """Do all windows of length r pass?  Costs at most 6*delta compose+test."""
    delta = seq.delta
    if not 1 <= r <= delta:
        raise RangeError(f"window length {r} outside 1..{delta}")
    counted = _Counted(algebra)
    sw = _Swag(counted.compose)
    value = True
    e = 0
    for s in range(delta - r + 1):
        while e < s + r:
            sw.push(algebra.lift(e, seq.graph_at(e)))
            e += 1
        if not counted.test(sw.aggregate()):
            value = False
            break
        sw.pop()
    return DecideResult(value, dict(counted.ops))


def _walk_grow(algebra, counted, seq) -> list:
    # q[s] = minimal passing window length starting at s (inf if none fits)
    delta = seq.delta
    sw = _Swag(counted.compose)
    q: list = []
    e = 0
    for s in range(delta):
        passed = False
        while True:
            if e > s:
                if counted.test(sw.aggregate()):
                    passed = True
                    break
            if e == delta:
                break
            sw.push(algebra.lift(e, seq.graph_at(e)))
            e += 1
        q.append(e - s if passed else math.inf)
        if e > s:
            sw.pop()
    return q


def _walk_shrink(algebra, counted, seq) -> list:
    # h[s] = maximal passing window length starting at s (0 if none)
    delta = seq.delta
    sw = _Swag(counted.compose)
    h: list = []
    e = 0
    for s in range(delta):
        if e < s:
            e = s  # previous start had no passing window at all
        while e < delta:
            x = algebra.lift(e, seq.graph_at(e))
            cand = x if e == s else counted.compose(sw.aggregate(), x)
            if not counted.test(cand):
                break
            sw.push(x)
            e += 1
        h.append(e - s)
        if e > s:
            # dropping the front keeps the window passing (shrink direction)
            sw.pop()
    return h


def extremal(algebra: WindowAlgebra, seq: SnapshotSequence) -> HierarchyResult:
    """Best window length r such that every length-r window passes.

    grow: smallest such r; shrink: largest.  None when no r in 1..delta
    works.  Costs at most 10*delta compose+test calls.
    """
    counted = _Counted(algebra)
    delta = seq.delta
    if algebra.direction == "grow":
        q = _walk_grow(algebra, counted, seq)
        best = None
        prefix_max: list = []
        running = 0
        for val in q:
            running = max(running, val)
            prefix_max.append(running)
        for r in range(1, delta + 1):
            if prefix_max[delta - r] <= r:
                best = r
                break
        return HierarchyResult(best, dict(counted.ops))
    h = _walk_shrink(algebra, counted, seq)
    prefix_min: list = []
    running = math.inf
    for val in h:
        running = min(running, val)
        prefix_min.append(running)
    for r in range(delta, 0, -1):
        if prefix_min[delta - r] >= r:
            return HierarchyResult(r, dict(counted.ops))
    return HierarchyResult(None, dict(counted.ops))


class IncrementalDecide:
    """Streaming variant: feed snapshots one by one, get per-window verdicts.

    append returns the verdict of the window ending at the new snapshot
    (None until r snapshots have arrived); all_pass aggregates them.
    """

    def __init__(self, algebra: WindowAlgebra, r: int):
        if r < 1:
            raise RangeError(f"window length {r} must be >= 1")
        self.algebra = algebra
        self.r = r
        self._counted = _Counted(algebra)
        self._sw = _Swag(self._counted.compose)
        self._count = 0
        self.all_pass = True

    @property
    def ops(self) -> dict[str, int]:
        return dict(self._counted.ops)

    def append(self, snapshot: StaticGraph) -> Optional[bool]:
        self._sw.push(self.algebra.lift(self._count, snapshot))
        self._count += 1
        if self._count < self.r:
            return None
        verdict = self._counted.test(self._sw.aggregate())
        self.all_pass = self.all_pass and verdict
        self._sw.pop()
        return verdict


def tinterval() -> WindowAlgebra:
    """Largest r such that every r-window's standing edges span a connected graph."""
    return WindowAlgebra(
        lift=lambda i, gs: gs,
        compose=lambda a, b: StaticGraph(a.nodes, a.edges & b.edges),
        test=lambda gs: gs.is_connected(),
        direction="shrink",
    )


def footprint_realization(target: StaticGraph) -> WindowAlgebra:
    """Smallest r such that every r-window's accumulated edges cover the target."""
    return WindowAlgebra(
        lift=lambda i, gs: gs.edges,
        compose=lambda a, b: a | b,
        test=lambda edges: target.edges <= edges,
        direction="grow",
    )


def _matrix_lift(gs: StaticGraph, order: dict[str, int], strict: bool) -> tuple[int, ...]:
    n = len(order)
    rows = [1 << i for i in range(n)]
    if strict:
        for u, v in gs.edges:
            rows[order[u]] |= 1 << order[v]
            rows[order[v]] |= 1 << order[u]
    else:
        for comp in gs.connected_components():
            mask = 0
            for v in comp:
                mask |= 1 << order[v]
            for v in comp:
                rows[order[v]] |= mask
    return tuple(rows)


def _matrix_join(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for row in a:
        acc = 0
        m = row
        while m:
            low = m & -m
            acc |= b[low.bit_length() - 1]
            m ^= low
        out.append(acc)
    return tuple(out)


def tdiameter(kind: str = "strict") -> WindowAlgebra:
    """Smallest r such that every r-window is temporally connected.

    Elements are reachability matrices (bitmask rows, diagonal set so that
    journeys may wait); compose is the boolean matrix join in window order.
    """
    strict = kind == "strict"
    order_cache: dict[frozenset, dict[str, int]] = {}

    def lift(i: int, gs: StaticGraph):
        order = order_cache.get(gs.nodes)
        if order is None:
            order = {v: k for k, v in enumerate(sorted(gs.nodes))}
            order_cache[gs.nodes] = order
        return _matrix_lift(gs, order, strict)

    def test(rows: tuple[int, ...]) -> bool:
        full = (1 << len(rows)) - 1
        return all(row == full for row in rows)

    return WindowAlgebra(lift=lift, compose=_matrix_join, test=test, direction="grow")


def rt_tdiameter(kind: str = "strict") -> WindowAlgebra:
    """Smallest r such that every r-window is round-trip temporally connected."""
    return WindowAlgebra(
        lift=lambda i, gs: roundtrip_lift(gs, i, kind),
        compose=concat_roundtrip,
        test=is_roundtrip_connected,
        direction="grow",
    )
