"""Brute-force reference implementations used to pin expected values.

Everything here trades speed for obviousness: exhaustive journey
enumeration, fixpoint reachability over (node, time) states, literal subset
and subgraph enumeration.  Library results are compared against these on
desk-scale instances; nothing in this module shares code with the package.
"""

from __future__ import annotations

import itertools

from tempnet.core import SnapshotSequence, StaticGraph, edge


# ---------------------------------------------------------------------------
# discrete journeys by exhaustive enumeration

def hop_options(seq, x, lb, hi):
    """(y, t) pairs for one hop out of x at time lb <= t <= hi."""
    for t in range(max(lb, 0), min(hi, seq.delta - 1) + 1):
        for u, v in seq.snapshots[t]:
            if u == x:
                yield v, t
            elif v == x:
                yield u, t


def simple_journeys(seq, src, dst, kind, lo=0, hi=None):
    """All journeys src -> dst visiting pairwise distinct nodes.

    Simple journeys preserve every end-to-end optimum (cutting a loop keeps
    the first and last hops and the subsequence stays time-ordered), so these
    suffice for foremost/shortest/fastest/latest-departure oracles.
    """
    if hi is None:
        hi = seq.delta - 1
    out = []

    def extend(node, lb, visited, hops):
        for y, t in hop_options(seq, node, lb, hi):
            if y in visited:
                continue
            nh = hops + [(node, y, t)]
            if y == dst:
                out.append(tuple(nh))
            extend(y, t + 1 if kind == "strict" else t, visited | {y}, nh)

    if src != dst:
        extend(src, lo, {src}, [])
    return out


def reach_states(seq, src, t0, kind):
    """Fixpoint over (node, last-hop-time) states reachable from src at t0."""
    strict = kind == "strict"
    states: set[tuple[str, int]] = set()
    changed = True
    while changed:
        changed = False
        frontier = [(src, None)] + sorted(states)
        for x, t in frontier:
            lb = t0 if t is None else (t + 1 if strict else t)
            for y, s in hop_options(seq, x, lb, seq.delta - 1):
                if (y, s) not in states:
                    states.add((y, s))
                    changed = True
    return states


def brute_closure_arcs(seq, kind):
    """(u, v) arcs with u != v and some journey u ~> v over the lifetime."""
    arcs = set()
    for u in seq.nodes:
        reached = {v for v, _ in reach_states(seq, u, 0, kind)}
        arcs |= {(u, v) for v in reached if v != u}
    return frozenset(arcs)


def brute_foremost(seq, src, t0, kind):
    """node -> earliest last-hop time, src excluded unless re-entered."""
    best: dict[str, int] = {}
    for v, t in reach_states(seq, src, t0, kind):
        if v not in best or t < best[v]:
            best[v] = t
    return best


def brute_rt_arcs(seq, start, end, kind):
    """(u, v) -> (earliest arrival, latest departure) for hops in [start, end)."""
    arcs = {}
    for u in seq.nodes:
        for v in seq.nodes:
            if u == v:
                continue
            js = simple_journeys(seq, u, v, kind, lo=start, hi=end - 1)
            if js:
                arcs[(u, v)] = (min(j[-1][2] for j in js), max(j[0][2] for j in js))
    return arcs


def brute_rt_connected(seq, start, end, kind):
    arcs = brute_rt_arcs(seq, start, end, kind)
    for u in seq.nodes:
        for v in seq.nodes:
            if u == v:
                continue
            go, back = arcs.get((u, v)), arcs.get((v, u))
            if go is None or back is None:
                return False
            composable = go[0] < back[1] if kind == "strict" else go[0] <= back[1]
            if not composable:
                return False
    return True


# ---------------------------------------------------------------------------
# components

def induced(seq, keep):
    keep = frozenset(keep)
    snaps = tuple(
        frozenset(e for e in snap if e[0] in keep and e[1] in keep)
        for snap in seq.snapshots
    )
    return SnapshotSequence(keep, snaps)


def is_tc(seq, kind):
    for u in seq.nodes:
        reached = {v for v, _ in reach_states(seq, u, 0, kind)}
        if not (seq.nodes - {u}) <= reached:
            return False
    return True


def brute_components(seq, kind):
    """Maximal node sets whose induced subsequence is temporally connected."""
    nodes = sorted(seq.nodes)
    connected_sets = [
        frozenset(combo)
        for size in range(1, len(nodes) + 1)
        for combo in itertools.combinations(nodes, size)
        if is_tc(induced(seq, combo), kind)
    ]
    return sorted(
        (s for s in connected_sets
         if not any(s < t for t in connected_sets)),
        key=lambda s: (-len(s), sorted(s)),
    )


# ---------------------------------------------------------------------------
# robust MIS

def _is_connected(nodes, edges):
    nodes = list(nodes)
    if not nodes:
        return True
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        x = stack.pop()
        for u, v in edges:
            for a, b in ((u, v), (v, u)):
                if a == x and b not in seen:
                    seen.add(b)
                    stack.append(b)
    return len(seen) == len(nodes)


def is_mis(nodes, edges, cand):
    cand = set(cand)
    adj = {v: set() for v in nodes}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    if any(adj[u] & cand for u in cand):
        return False
    return all(v in cand or adj[v] & cand for v in nodes)


def spanning_trees(g: StaticGraph):
    """All spanning trees, as edge lists (include/exclude with pruning)."""
    edges = sorted(g.edges)
    nodes = sorted(g.nodes)
    n = len(nodes)
    out = []

    def rec(i, chosen, comp):
        if len(chosen) == n - 1:
            out.append(list(chosen))
            return
        if i == len(edges) or len(edges) - i < (n - 1) - len(chosen):
            return
        u, v = edges[i]
        ru, rv = comp[u], comp[v]
        if ru != rv:
            merged = {x: (ru if c == rv else c) for x, c in comp.items()}
            rec(i + 1, chosen + [edges[i]], merged)
        # skipping edges[i] must leave the rest connectable
        if _is_connected(nodes, chosen + edges[i + 1:]):
            rec(i + 1, chosen, comp)

    rec(0, [], {v: v for v in nodes})
    return out


def robust_mis_tree_oracle(g: StaticGraph, cand, trees=None):
    """Robust iff MIS of g and still maximal in every spanning tree.

    A maximality violation in any connected spanning subgraph survives in
    that subgraph's spanning trees (fewer edges, same vertex set), so trees
    are exhaustive witnesses.  Pass trees to reuse one enumeration across
    many candidate sets.
    """
    nodes = sorted(g.nodes)
    if not is_mis(nodes, g.edges, cand):
        return False
    if trees is None:
        trees = spanning_trees(g)
    return all(is_mis(nodes, t, cand) for t in trees)


def robust_mis_literal_oracle(g: StaticGraph, cand):
    """Word-for-word definition: valid in every connected spanning subgraph."""
    edges = sorted(g.edges)
    nodes = sorted(g.nodes)
    for r in range(len(edges) + 1):
        for sub in itertools.combinations(edges, r):
            if _is_connected(nodes, list(sub)) and not is_mis(nodes, sub, cand):
                return False
    return True


def all_mis(g: StaticGraph):
    nodes = sorted(g.nodes)
    return [
        frozenset(c)
        for r in range(1, len(nodes) + 1)
        for c in itertools.combinations(nodes, r)
        if is_mis(nodes, g.edges, c)
    ]


# ---------------------------------------------------------------------------
# sliding-window properties

def window_passes(seq, prop, s, r, kind="strict", target=None):
    snaps = seq.snapshots[s:s + r]
    if prop == "tinterval":
        inter = set(snaps[0])
        for snap in snaps[1:]:
            inter &= snap
        return _is_connected(sorted(seq.nodes), sorted(inter))
    if prop == "realization":
        union = set()
        for snap in snaps:
            union |= snap
        return set(target.edges) <= union
    sub = SnapshotSequence(seq.nodes, tuple(snaps))
    if prop == "tdiam":
        return is_tc(sub, kind)
    if prop == "rtdiam":
        return brute_rt_connected(sub, 0, r, kind)
    raise ValueError(prop)


def brute_decide(seq, prop, r, kind="strict", target=None):
    return all(
        window_passes(seq, prop, s, r, kind=kind, target=target)
        for s in range(seq.delta - r + 1)
    )


def brute_extremal(seq, prop, kind="strict", target=None):
    """Grow properties: least r with all windows passing.  Shrink: greatest."""
    rs = range(1, seq.delta + 1)
    if prop == "tinterval":
        rs = reversed(rs)
    for r in rs:
        if brute_decide(seq, prop, r, kind=kind, target=target):
            return r
    return None


# ---------------------------------------------------------------------------
# steady progress

def needed_alpha(hops, wlo, strict):
    gaps = [hops[0][2] - wlo]
    for (_, _, t1), (_, _, t2) in zip(hops, hops[1:]):
        gaps.append(t2 - (t1 + 1 if strict else t1))
    return max(gaps)


def brute_alpha(seq, kind, wlo=0, whi=None, pairs=None):
    """max over ordered pairs of min over node-distinct journeys of the
    largest idle gap (revisits are out: bouncing on a lasting edge would
    refresh the token forever and void the bound)."""
    if whi is None:
        whi = seq.delta
    strict = kind == "strict"
    if pairs is None:
        nodes = sorted(seq.nodes)
        pairs = [(a, b) for a in nodes for b in nodes if a != b]
    worst = 0
    for a, b in pairs:
        js = simple_journeys(seq, a, b, kind, lo=wlo, hi=whi - 1)
        if not js:
            return None
        worst = max(worst, min(needed_alpha(j, wlo, strict) for j in js))
    return worst


# ---------------------------------------------------------------------------
# fair schedules

def exact_fair_schedules(seq):
    """Every schedule selecting each present edge exactly once per snapshot."""
    per_snap = [
        [list(p) for p in itertools.permutations(sorted(snap))]
        for snap in seq.snapshots
    ]
    for combo in itertools.product(*per_snap):
        yield [list(round_edges) for round_edges in combo]


def broadcast_under(seq, schedule, emitter):
    informed = {emitter}
    for round_edges in schedule:
        for u, v in round_edges:
            if u in informed or v in informed:
                informed |= {u, v}
    return frozenset(informed)
