"""Coloring half-planes through their dual directed points.

A half-plane with boundary ``y = a x + b`` becomes the point ``(a, b)``,
heading north when the region lies above the boundary. A point ``(c, d)``
becomes the line ``y = -c x + d``; containment turns into the directed point
seeing that line along its vertical ray.
"""
from __future__ import annotations

import bisect
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .geom import (
    DirectedPoint,
    Family,
    HalfPlane,
    Heading,
    Point,
    Region,
    lower_hull,
    require_general_position,
    upper_hull,
)
from .halfplane_primal import color_points_h_k3
from .oracle import Coloring


def dualize(halfplanes: Sequence[HalfPlane]) -> list[DirectedPoint]:
    return [DirectedPoint(h.slope, h.intercept,
                          Heading.NORTH if h.region is Region.ABOVE else Heading.SOUTH)
            for h in halfplanes]


def dual_line(p: Point) -> tuple:
    """(slope, intercept) of the line dual to ``p``."""
    return (-p.x, p.y)


def dual_sees(d: DirectedPoint, line) -> bool:
    slope, intercept = line
    return d.sees(slope, intercept)


# -- strict 2-variable feasibility ---------------------------------------------

def strict_feasible(lower: Sequence[tuple], upper: Sequence[tuple]) -> bool:
    """Is there (alpha, beta) with ``beta > c + d*alpha`` for every ``(c, d)`` in
    ``lower`` and ``beta < c + d*alpha`` for every one in ``upper``?

    beta can be chosen iff max(lower) < min(upper) at some alpha, i.e. iff
    every difference upper_m - lower_k is positive there. Each difference is
    affine in alpha, so the alpha-set is an open interval computed exactly.
    """
    if not lower or not upper:
        return True
    lo, hi = None, None
    for cl, dl in lower:
        for cu, du in upper:
            c, d = cu - cl, du - dl  # need c + d*alpha > 0
            if d == 0:
                if c <= 0:
                    return False
                continue
            root = Fraction(-c) / d
            if d > 0:
                lo = root if lo is None or root > lo else lo
            else:
                hi = root if hi is None or root < hi else hi
    return lo is None or hi is None or lo < hi


def _below_line(p: Point) -> tuple:
    # line y = alpha*x + beta passes above p  <=>  beta > p.y - alpha*p.x
    return (p.y, -p.x)


@dataclass
class CaterpillarGraph:
    p_path: list[int]
    q_path: list[int]
    cross_edges: set[tuple[int, int]] = field(default_factory=set)

    def vertices(self) -> list[tuple[str, int]]:
        return [("p", i) for i in range(len(self.p_path))] + \
               [("q", j) for j in range(len(self.q_path))]

    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices()}
        for side, path in (("p", self.p_path), ("q", self.q_path)):
            for i in range(len(path) - 1):
                adj[(side, i)].add((side, i + 1))
                adj[(side, i + 1)].add((side, i))
        for i, j in self.cross_edges:
            adj[("p", i)].add(("q", j))
            adj[("q", j)].add(("p", i))
        return adj

    def crossing_pairs(self) -> list:
        edges = sorted(self.cross_edges)
        return [(e, f) for e in edges for f in edges if e[0] < f[0] and e[1] < f[1]]


def _hull_path(duals, heading, chain):
    idx = [i for i, d in enumerate(duals) if d.heading is heading]
    where = {duals[i].point: i for i in idx}
    return idx, [where[p] for p in chain(duals[i].point for i in idx)]


def build_caterpillar(duals: Sequence[DirectedPoint]) -> CaterpillarGraph:
    """Hull paths of the two headings plus every cross edge (i, j) for which some
    line sees p_i and q_j but none of their path neighbours."""
    _, p_path = _hull_path(duals, Heading.NORTH, lower_hull)
    _, q_path = _hull_path(duals, Heading.SOUTH, upper_hull)
    g = CaterpillarGraph(p_path, q_path)
    P = [duals[i].point for i in p_path]
    Q = [duals[j].point for j in q_path]
    for i, p in enumerate(P):
        lower = [_below_line(p)]
        upper = [_below_line(P[t]) for t in (i - 1, i + 1) if 0 <= t < len(P)]
        for j, q in enumerate(Q):
            lo = lower + [_below_line(Q[t]) for t in (j - 1, j + 1) if 0 <= t < len(Q)]
            if strict_feasible(lo, upper + [_below_line(q)]):
                g.cross_edges.add((i, j))
    assert not g.crossing_pairs(), "caterpillar cross edges intersect"
    return g


def three_color(g: CaterpillarGraph) -> dict:
    """Peel vertices of degree <= 2, then color greedily in reverse."""
    adj = g.adjacency()
    degree = {v: len(n) for v, n in adj.items()}
    removed: set = set()
    order = []
    queue = deque(sorted(v for v, d in degree.items() if d <= 2))
    while queue:
        v = queue.popleft()
        if v in removed:
            continue
        removed.add(v)
        order.append(v)
        for u in adj[v]:
            if u not in removed:
                degree[u] -= 1
                if degree[u] == 2:
                    queue.append(u)
    assert len(order) == len(adj), "caterpillar has a subgraph of minimum degree 3"
    colors: dict = {}
    for v in reversed(order):
        taken = {colors[u] for u in adj[v] if u in colors}
        colors[v] = min(c for c in range(3) if c not in taken)
    return colors


def _bracket(path_pts: Sequence[Point], p: Point) -> tuple[int, int]:
    # hull vertices whose x-range holds p; equal x is allowed at either end
    xs = [q.x for q in path_pts]
    k = bisect.bisect_left(xs, p.x)
    if k < len(xs) and xs[k] == p.x:
        return k, k
    assert 0 < k < len(xs), "inner dual point outside its hull's x-range"
    return k - 1, k


def color_halfplanes_k2(halfplanes: Sequence[HalfPlane]) -> Coloring:
    """3 colors; every point in two or more half-planes sees two colors."""
    require_general_position(halfplanes, Family.H_RECTS)
    if not halfplanes:
        raise ValueError("need at least one half-plane")
    duals = dualize(halfplanes)
    g = build_caterpillar(duals)
    vc = three_color(g)
    colors = [-1] * len(duals)
    for side, path in (("p", g.p_path), ("q", g.q_path)):
        for i, v in enumerate(path):
            colors[v] = vc[(side, i)]
    for path, heading in ((g.p_path, Heading.NORTH), (g.q_path, Heading.SOUTH)):
        pts = [duals[v].point for v in path]
        for v, d in enumerate(duals):
            if d.heading is not heading or colors[v] >= 0:
                continue
            i, j = _bracket(pts, d.point)
            taken = {colors[path[i]], colors[path[j]]}
            colors[v] = min(c for c in range(3) if c not in taken)
    return Coloring(3, colors)


def color_halfplanes_k4(halfplanes: Sequence[HalfPlane]) -> Coloring:
    """2 colors for k = 4: the hull 2-coloring on each heading, inverted on south."""
    require_general_position(halfplanes, Family.H_RECTS)
    if not halfplanes:
        raise ValueError("need at least one half-plane")
    duals = dualize(halfplanes)
    colors = [0] * len(duals)
    for heading, invert in ((Heading.NORTH, False), (Heading.SOUTH, True)):
        idx = [i for i, d in enumerate(duals) if d.heading is heading]
        if not idx:
            continue
        sub = color_points_h_k3([duals[i].point for i in idx])
        for i, c in zip(idx, sub.colors):
            colors[i] = 1 - c if invert else c
    return Coloring(2, colors)
