"""Membership tests for finite trace classes plus related static checks.

The classes are named by what the trace guarantees:

* ``J1A`` / ``JA1``: some node has a journey to all others / from all others.
* ``TC``: every ordered pair is connected by a journey.
* ``TCrt``: every ordered pair has a journey and a later-departing return.
* ``E1A``: some node shares an edge with every other at some point.
* ``K``: every pair shares an edge at some point (complete footprint).

Each test comes in a strict and a non-strict flavour and reports a witness
node where one makes sense.  ``classify`` bundles the memberships with the
numeric parameters (realization bound, period, T-interval connectivity,
temporal diameters, steady-progress alpha) into one report.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import (
    SnapshotSequence,
    StaticGraph,
    TemporalGraph,
    discretize,
    footprint,
)
from .closure import (
    _bron_kerbosch,
    is_roundtrip_connected,
    nonstrict_closure,
    roundtrip_closure,
    strict_closure,
)
from .errors import ContractError, InputError
from . import hierarchy
from .journeys import steady_progress_alpha

CLASS_NAMES = ("J1A", "JA1", "TC", "TCrt", "E1A", "K")


def _as_sequence(g: TemporalGraph) -> SnapshotSequence:
    if isinstance(g, SnapshotSequence):
        return g
    return discretize(g).sequence


def finite_class_membership(
    g: TemporalGraph, name: str, kind: str = "strict"
) -> tuple[bool, Optional[str]]:
    """(member, witness); witness is the smallest node id where one exists."""
    if name not in CLASS_NAMES:
        raise InputError(f"unknown class {name!r}, expected one of {CLASS_NAMES}")
    if kind not in ("strict", "nonstrict"):
        raise InputError(f"unknown journey kind {kind!r}")
    seq = _as_sequence(g)
    nodes = sorted(seq.nodes)
    n = len(nodes)
    if name in ("E1A", "K"):
        fp = footprint(seq)
        if name == "K":
            return fp.is_complete(), None
        for v in nodes:
            if len(fp.adjacency[v]) == n - 1:
                return True, v
        return False, None
    if name == "TCrt":
        rt = roundtrip_closure(seq, kind=kind)
        return is_roundtrip_connected(rt), None
    closure = strict_closure(seq) if kind == "strict" else nonstrict_closure(seq)
    if name == "TC":
        return closure.is_complete, None
    out_deg = {v: 0 for v in nodes}
    in_deg = {v: 0 for v in nodes}
    for u, v in closure.arcs:
        out_deg[u] += 1
        in_deg[v] += 1
    deg = out_deg if name == "J1A" else in_deg
    for v in nodes:
        if deg[v] == n - 1:
            return True, v
    return False, None


def smallest_period(g: TemporalGraph) -> Optional[int]:
    """Smallest p < delta with snapshot t == snapshot t+p everywhere, else None."""
    seq = _as_sequence(g)
    delta = seq.delta
    for p in range(1, delta):
        if all(seq.snapshots[i] == seq.snapshots[i + p] for i in range(delta - p)):
            return p
    return None


def bounded_realization_delta(g: TemporalGraph) -> Optional[int]:
    """Smallest r such that every r-window accumulates the whole footprint."""
    seq = _as_sequence(g)
    algebra = hierarchy.footprint_realization(footprint(seq))
    return hierarchy.extremal(algebra, seq).value


def verify_covering(g: TemporalGraph, cover, mode: str = "temporal") -> bool:
    """Check a dominating-set style covering.

    temporal: one node set dominating the footprint.  evolving: one set per
    snapshot, each dominating its snapshot (so isolated nodes must be picked).
    permanent: one set dominating every single snapshot.
    """
    seq = _as_sequence(g)

    def dominates(graph: StaticGraph, chosen: frozenset[str]) -> bool:
        for x in chosen:
            if x not in graph.nodes:
                raise InputError(f"unknown node {x!r} in covering")
        return all(
            v in chosen or graph.adjacency[v] & chosen for v in graph.nodes
        )

    if mode == "temporal":
        return dominates(footprint(seq), frozenset(cover))
    if mode == "permanent":
        chosen = frozenset(cover)
        return all(dominates(seq.graph_at(t), chosen) for t in range(seq.delta))
    if mode == "evolving":
        stages = [frozenset(s) for s in cover]
        if len(stages) != seq.delta:
            raise InputError(
                f"evolving covering needs {seq.delta} stages, got {len(stages)}"
            )
        return all(
            dominates(seq.graph_at(t), stages[t]) for t in range(seq.delta)
        )
    raise InputError(f"unknown covering mode {mode!r}")


def is_robust_mis(g: StaticGraph, candidate: Iterable[str]) -> bool:
    """Is candidate an independent dominating set of every connected spanning
    subgraph of g?

    Independence survives edge removal, so the only way to break maximality
    is a node outside the set losing all its edges into the set while the
    graph stays connected; the check below tests exactly that, node by node.
    """
    if not g.is_connected():
        raise InputError("robustness is defined over connected graphs only")
    chosen = frozenset(candidate)
    for x in chosen:
        if x not in g.nodes:
            raise InputError(f"unknown node {x!r} in candidate set")
    for u, v in g.edges:
        if u in chosen and v in chosen:
            return False  # not independent
    for v in g.nodes - chosen:
        if not g.adjacency[v] & chosen:
            return False  # not maximal
    for v in sorted(g.nodes - chosen):
        if _connected_without(g, v, g.adjacency[v] & chosen):
            return False
    return True


def _connected_without(g: StaticGraph, v: str, banned_neighbors: frozenset[str]) -> bool:
    # connectivity of g minus the edges between v and banned_neighbors
    start = next(iter(sorted(g.nodes)))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.adjacency[x]:
            if x == v and y in banned_neighbors:
                continue
            if y == v and x in banned_neighbors:
                continue
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(g.nodes)


def find_robust_mis(g: StaticGraph, limit_n: Optional[int] = 20) -> Optional[frozenset[str]]:
    """First robust maximal independent set in lexicographic order, or None."""
    if not g.is_connected():
        raise InputError("robustness is defined over connected graphs only")
    if limit_n is not None and len(g.nodes) > limit_n:
        raise ContractError(
            f"{len(g.nodes)} nodes exceed the robust-MIS search limit {limit_n}"
        )
    complement = {
        v: frozenset(g.nodes - g.adjacency[v] - {v}) for v in g.nodes
    }
    mises = sorted(_bron_kerbosch(dict(complement)), key=lambda s: sorted(s))
    for mis in mises:
        if is_robust_mis(g, mis):
            return mis
    return None


@dataclass(frozen=True)
class ClassReport:
    """Full classification of one trace."""

    classes: dict[str, dict[str, object]]
    delta: Optional[int]
    period: Optional[int]
    tinterval: Optional[int]
    tdiam: Optional[int]
    rtdiam: Optional[int]
    alpha: object

    def to_json(self) -> dict:
        out: dict = {name: dict(info) for name, info in self.classes.items()}
        out["delta"] = self.delta
        out["period"] = self.period
        out["tinterval"] = self.tinterval
        out["tdiam"] = self.tdiam
        out["rtdiam"] = self.rtdiam
        out["alpha"] = self.alpha
        return out


def classify(g: TemporalGraph) -> ClassReport:
    """Class memberships plus the numeric window parameters of the trace.

    Continuous traces are classified through their discretization.  The
    witness reported per class is the strict one when strict membership
    holds, otherwise the non-strict one.
    """
    seq = _as_sequence(g)
    classes: dict[str, dict[str, object]] = {}
    for name in CLASS_NAMES:
        s_ok, s_wit = finite_class_membership(seq, name, "strict")
        n_ok, n_wit = finite_class_membership(seq, name, "nonstrict")
        classes[name] = {
            "strict": s_ok,
            "nonstrict": n_ok,
            "witness": s_wit if s_ok else n_wit,
        }
    return ClassReport(
        classes=classes,
        delta=bounded_realization_delta(seq),
        period=smallest_period(seq),
        tinterval=hierarchy.extremal(hierarchy.tinterval(), seq).value,
        tdiam=hierarchy.extremal(hierarchy.tdiameter("strict"), seq).value,
        rtdiam=hierarchy.extremal(hierarchy.rt_tdiameter("strict"), seq).value,
        alpha=steady_progress_alpha(seq, kind="strict"),
    )
