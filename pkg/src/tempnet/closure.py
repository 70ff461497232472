"""Reachability closures, round-trip closures, and temporal components.

The closure of a snapshot sequence is the directed graph with an arc (u, v)
whenever u has a journey to v.  Strict journeys take at most one hop per
snapshot; non-strict journeys may cross a whole connected component of a
snapshot in one time step.  Round-trip closures additionally carry, per arc,
the earliest arrival and latest departure inside a window, and compose over
adjacent windows, which is what makes the divide-and-conquer parameter
searches in :mod:`tempnet.hierarchy` possible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .core import SnapshotSequence, StaticGraph, TemporalGraph, edge, induced_sequence
from .errors import ContractError, InputError


def _require_sequence(g: TemporalGraph) -> SnapshotSequence:
    if not isinstance(g, SnapshotSequence):
        raise InputError("closure operations need a snapshot sequence; discretize() first")
    return g


def _mask_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _snapshot_components(nodes, snap) -> list[set[str]]:
    adj: dict[str, set[str]] = {v: set() for v in nodes}
    for u, v in snap:
        adj[u].add(v)
        adj[v].add(u)
    seen: set[str] = set()
    comps = []
    for start in sorted(nodes):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(comp)
    return comps


def _reach_masks(seq: SnapshotSequence, strict: bool):
    """R[v] = bitmask of nodes with a journey to v (v included)."""
    order = sorted(seq.nodes)
    idx = {v: i for i, v in enumerate(order)}
    reach = {v: 1 << idx[v] for v in order}
    for snap in seq.snapshots:
        if strict:
            upd: dict[str, int] = {}
            for u, v in snap:
                upd[v] = upd.get(v, 0) | reach[u]
                upd[u] = upd.get(u, 0) | reach[v]
            for v, m in upd.items():
                reach[v] |= m
        else:
            for comp in _snapshot_components(seq.nodes, snap):
                if len(comp) == 1:
                    continue
                m = 0
                for x in comp:
                    m |= reach[x]
                for x in comp:
                    reach[x] = m
    return order, reach


@dataclass(frozen=True)
class Closure:
    """Directed journey-reachability arcs over a whole sequence."""

    nodes: frozenset[str]
    kind: str
    arcs: frozenset[tuple[str, str]]

    def reaches(self, u: str, v: str) -> bool:
        return u == v or (u, v) in self.arcs

    @property
    def is_complete(self) -> bool:
        n = len(self.nodes)
        return len(self.arcs) == n * (n - 1)


def _closure(seq: SnapshotSequence, kind: str) -> Closure:
    order, reach = _reach_masks(seq, kind == "strict")
    arcs = frozenset(
        (order[i], v)
        for v in order
        for i in _mask_bits(reach[v])
        if order[i] != v
    )
    return Closure(seq.nodes, kind, arcs)


def strict_closure(g: TemporalGraph) -> Closure:
    return _closure(_require_sequence(g), "strict")


def nonstrict_closure(g: TemporalGraph) -> Closure:
    return _closure(_require_sequence(g), "nonstrict")


@dataclass(frozen=True)
class RoundTripClosure:
    """Per-arc earliest arrival and latest departure inside [start, end).

    Loops are implicit: ea(u, u) = start and ld(u, u) = end, the identities
    for composition (sit out a prefix or a suffix of the window).
    """

    nodes: frozenset[str]
    window: tuple[int, int]
    kind: str
    arcs: dict[tuple[str, str], tuple[int, int]]

    def ea(self, u: str, v: str) -> Optional[int]:
        if u == v:
            return self.window[0]
        arc = self.arcs.get((u, v))
        return arc[0] if arc else None

    def ld(self, u: str, v: str) -> Optional[int]:
        if u == v:
            return self.window[1]
        arc = self.arcs.get((u, v))
        return arc[1] if arc else None


def roundtrip_lift(snapshot: StaticGraph, index: int, kind: str = "strict") -> RoundTripClosure:
    """Round-trip closure of the single-snapshot window [index, index+1)."""
    arcs: dict[tuple[str, str], tuple[int, int]] = {}
    if kind == "strict":
        for u, v in snapshot.edges:
            arcs[(u, v)] = (index, index)
            arcs[(v, u)] = (index, index)
    else:
        for comp in snapshot.connected_components():
            for u in comp:
                for v in comp:
                    if u != v:
                        arcs[(u, v)] = (index, index)
    return RoundTripClosure(snapshot.nodes, (index, index + 1), kind, arcs)


def concat_roundtrip(first: RoundTripClosure, second: RoundTripClosure) -> RoundTripClosure:
    """Compose closures of adjacent windows [a, m) and [m, b) into [a, b)."""
    if first.nodes != second.nodes:
        raise ContractError("round-trip closures are over different node sets")
    if first.kind != second.kind:
        raise ContractError("cannot mix strict and non-strict round-trip closures")
    if first.window[1] != second.window[0]:
        raise ContractError(
            f"windows {first.window} and {second.window} are not adjacent"
        )
    nodes = sorted(first.nodes)
    # relay index: who can be reached from u in A, who can reach v in B
    out_a: dict[str, list[str]] = {u: [] for u in nodes}
    in_b: dict[str, list[str]] = {v: [] for v in nodes}
    for (u, w) in first.arcs:
        out_a[u].append(w)
    for (w, v) in second.arcs:
        in_b[v].append(w)
    arcs: dict[tuple[str, str], tuple[int, int]] = {}
    for u in nodes:
        reach_a = set(out_a[u])
        for v in nodes:
            if u == v:
                continue
            a_arc = first.arcs.get((u, v))
            b_arc = second.arcs.get((u, v))
            ea_cands = []
            ld_cands = []
            if a_arc:
                ea_cands.append(a_arc[0])
                ld_cands.append(a_arc[1])
            if b_arc:
                ea_cands.append(b_arc[0])
                ld_cands.append(b_arc[1])
            for w in in_b[v]:
                if w == u or w in reach_a:
                    # any arrival in A precedes any departure in B
                    ea_cands.append(second.arcs[(w, v)][0])
                    if w != u:
                        ld_cands.append(first.arcs[(u, w)][1])
            if ea_cands:
                arcs[(u, v)] = (min(ea_cands), max(ld_cands))
    return RoundTripClosure(first.nodes, (first.window[0], second.window[1]), first.kind, arcs)


def roundtrip_closure(
    g: TemporalGraph,
    window: Optional[tuple[int, int]] = None,
    kind: str = "strict",
) -> RoundTripClosure:
    seq = _require_sequence(g)
    if window is None:
        window = (0, seq.delta)
    start, end = int(window[0]), int(window[1])
    if not 0 <= start < end <= seq.delta:
        raise InputError(f"window [{start}, {end}) outside 0..{seq.delta}")
    acc = roundtrip_lift(seq.graph_at(start), start, kind)
    for i in range(start + 1, end):
        acc = concat_roundtrip(acc, roundtrip_lift(seq.graph_at(i), i, kind))
    return acc


def is_roundtrip_connected(rt: RoundTripClosure) -> bool:
    """Every ordered pair has a journey and a return departing after arrival."""
    strict = rt.kind == "strict"
    for u in rt.nodes:
        for v in rt.nodes:
            if u == v:
                continue
            go = rt.arcs.get((u, v))
            back = rt.arcs.get((v, u))
            if go is None or back is None:
                return False
            if strict:
                if not go[0] < back[1]:
                    return False
            elif not go[0] <= back[1]:
                return False
    return True


def _bron_kerbosch(adj: dict[str, set[str]]) -> list[frozenset[str]]:
    cliques: list[frozenset[str]] = []

    def bk(r: set, p: set, x: set):
        if not p and not x:
            cliques.append(frozenset(r))
            return
        pivot = max(sorted(p | x), key=lambda w: len(adj[w] & p))
        for v in sorted(p - adj[pivot]):
            bk(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    bk(set(), set(adj), set())
    return cliques


def _is_component(seq: SnapshotSequence, nodes: frozenset[str], strict: bool) -> bool:
    # closed variant: journeys must stay inside the candidate set
    if len(nodes) == 1:
        return True
    sub = induced_sequence(seq, nodes)
    _, reach = _reach_masks(sub, strict)
    full = (1 << len(nodes)) - 1
    return all(reach[v] == full for v in nodes)


def maximal_temporal_components(
    g: TemporalGraph,
    kind: str = "strict",
    limit_n: Optional[int] = 15,
) -> list[frozenset[str]]:
    """Inclusion-maximal node sets whose induced trace is temporally connected.

    Components may overlap.  Journeys must stay within the component (closed
    semantics).  Exponential in the worst case, hence the node limit; pass
    limit_n=None to override it.
    """
    seq = _require_sequence(g)
    if kind not in ("strict", "nonstrict"):
        raise InputError(f"unknown journey kind {kind!r}")
    strict = kind == "strict"
    if limit_n is not None and len(seq.nodes) > limit_n:
        raise ContractError(
            f"{len(seq.nodes)} nodes exceed the component search limit {limit_n}"
        )
    order, reach = _reach_masks(seq, strict)
    idx = {v: i for i, v in enumerate(order)}
    mutual: dict[str, set[str]] = {v: set() for v in order}
    for u, v in itertools.combinations(order, 2):
        if reach[v] >> idx[u] & 1 and reach[u] >> idx[v] & 1:
            mutual[u].add(v)
            mutual[v].add(u)
    accepted: list[frozenset[str]] = []
    for clique in sorted(_bron_kerbosch(mutual), key=lambda c: (-len(c), sorted(c))):
        for size in range(len(clique), 0, -1):
            for combo in itertools.combinations(sorted(clique), size):
                cand = frozenset(combo)
                if any(cand <= seen for seen in accepted):
                    continue
                if _is_component(seq, cand, strict):
                    accepted.append(cand)
    maximal = [
        c for c in accepted
        if not any(c < other for other in accepted)
    ]
    return sorted(set(maximal), key=lambda c: (-len(c), sorted(c)))


def semaphore_transform(g: StaticGraph) -> SnapshotSequence:
    """Unfold a static graph into 3 snapshots with two fresh nodes per edge.

    Snapshot 0 is empty; snapshot 1 links each endpoint to its own fresh
    relay; snapshot 2 links each relay to the opposite endpoint.  The
    endpoints of every static edge then reach each other by strict journeys
    running in parallel through the two relays.
    """
    taken = set(g.nodes)

    def fresh(base: str) -> str:
        name = base
        while name in taken:
            name += "'"
        taken.add(name)
        return name

    nodes = set(g.nodes)
    one: set = set()
    two: set = set()
    for u, v in sorted(g.edges):
        pu = fresh(f"{u}'{v}")
        pv = fresh(f"{v}'{u}")
        nodes |= {pu, pv}
        one.add(edge(u, pu))
        one.add(edge(v, pv))
        two.add(edge(pu, v))
        two.add(edge(pv, u))
    return SnapshotSequence.build(nodes, [frozenset(), one, two])
