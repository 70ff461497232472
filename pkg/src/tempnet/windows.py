"""Sliding-window observables over a trace.

Metrics are measured inside each window [s, s+width) with journeys departing
at or after the window start (unlike the pointwise eccentricity convention,
which looks just after an instant).  Windows advance by a fixed step from
the start of the lifetime; a trailing partial window is dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import SnapshotSequence, TemporalGraph, Time, as_time, lifetime, temporal_subgraph
from .errors import InputError, RangeError
from .io import format_time
from .journeys import earliest_arrival

METRICS = ("tdiam", "tc")  # plus "ecc:<node>"


@dataclass(frozen=True)
class WindowSeries:
    metric: str
    width: Time
    step: Time
    points: tuple[tuple[Time, Time], ...]

    def to_csv(self) -> str:
        lines = ["start,value"]
        for start, value in self.points:
            lines.append(f"{format_time(start)},{format_time(value)}")
        return "\n".join(lines) + "\n"


def _window_ecc(sub: TemporalGraph, u: str, start: Time) -> Time:
    table = earliest_arrival(sub, u, start)
    worst: Time = 0
    for v in sub.nodes:
        if v == u:
            continue
        if v not in table.parent:
            return math.inf
        worst = max(worst, table.arrival[v] - start)
    return worst


def _window_value(sub: TemporalGraph, metric: str, start: Time) -> Time:
    if metric == "tdiam":
        return max(_window_ecc(sub, u, start) for u in sorted(sub.nodes))
    if metric == "tc":
        return int(
            all(_window_ecc(sub, u, start) != math.inf for u in sorted(sub.nodes))
        )
    if metric.startswith("ecc:"):
        node = metric.split(":", 1)[1]
        if node not in sub.nodes:
            raise InputError(f"unknown node {node!r} in metric {metric!r}")
        return _window_ecc(sub, node, start)
    raise InputError(f"unknown metric {metric!r}; use tdiam, tc, or ecc:<node>")


def sliding_metric(g: TemporalGraph, metric: str, width, step) -> WindowSeries:
    """Evaluate a metric over windows [s, s+width) stepping by ``step``."""
    discrete = isinstance(g, SnapshotSequence)
    if discrete:
        width, step = int(width), int(step)
        lo: Time = 0
        hi: Time = g.delta
    else:
        width, step = as_time(width), as_time(step)
        lo, hi = lifetime(g)
    if width <= 0 or step <= 0:
        raise RangeError("window width and step must be positive")
    points = []
    s = lo
    while s + width <= hi:
        sub = temporal_subgraph(g, (s, s + width))
        start: Time = 0 if discrete else s
        points.append((s, _window_value(sub, metric, start)))
        s = s + step
    if not points:
        raise RangeError(f"no window of width {width} fits the lifetime [{lo}, {hi})")
    return WindowSeries(metric, width, step, tuple(points))
