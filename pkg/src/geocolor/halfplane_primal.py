"""Coloring points against half-planes, driven by the convex hull."""
from __future__ import annotations

from typing import Sequence

from .geom import Family, Point, hull_indices, in_triangle, require_general_position
from .oracle import Coloring, enumerate_primal_halfplane

RED, BLUE = 0, 1


def _hull_cycle_colors(m: int) -> list[int]:
    """Three colors around a cycle of length m, neighbours always different."""
    colors = [i % 2 for i in range(m)]
    if m % 2 and m > 1:
        colors[-1] = 2
    return colors


def _checked(points: Sequence[Point]) -> list[int]:
    require_general_position(points, Family.H_POINTS)
    if not points:
        raise ValueError("need at least one point")
    return hull_indices(points)


def is_p_star(points: Sequence[Point]) -> bool:
    """Four points, one of them strictly inside the triangle of the others."""
    return len(points) == 4 and len(hull_indices(points)) == 3


def color_points_h_k2_simple(points: Sequence[Point]) -> Coloring:
    """Hull vertices get 3 colors, everything inside gets the 4th."""
    hull = _checked(points)
    colors = [3] * len(points)
    for v, c in zip(hull, _hull_cycle_colors(len(hull))):
        colors[v] = c
    return Coloring(4, colors)


def cut_partners(points: Sequence[Point], hull: Sequence[int] | None = None) -> dict[int, set[int]]:
    """For each inner point, the hull vertices whose removal exposes it.

    A vertex ``q`` can be cut off together with an inner point ``p`` only if
    ``p`` becomes a hull vertex once ``q`` is gone, so this over-approximates
    the pairs a half-plane can isolate (which is the safe direction).
    """
    hull = hull_indices(points) if hull is None else list(hull)
    on_hull = set(hull)
    partners: dict[int, set[int]] = {i: set() for i in range(len(points)) if i not in on_hull}
    for q in hull:
        rest = [i for i in range(len(points)) if i != q]
        for j in hull_indices([points[i] for i in rest]):
            v = rest[j]
            if v not in on_hull:
                partners[v].add(q)
    return partners


def color_points_h_k2(points: Sequence[Point]) -> Coloring:
    """2-proper with 3 colors, or 4 on the single exceptional configuration."""
    hull = _checked(points)
    if is_p_star(points):
        return color_points_h_k2_simple(points)
    colors = [0] * len(points)
    for v, c in zip(hull, _hull_cycle_colors(len(hull))):
        colors[v] = c
    for p, qs in cut_partners(points, hull).items():
        taken = {colors[q] for q in qs}
        assert len(qs) <= 2, f"inner point {p} is exposed by {len(qs)} hull vertices"
        colors[p] = min(c for c in range(3) if c not in taken)
    return Coloring(4, colors)


def nonempty_triangles(points: Sequence[Point], hull: Sequence[int] | None = None) -> list[bool]:
    """Per hull vertex (in hull order): does its ear triangle hold a point?

    Decided by deleting the vertex and looking for new hull vertices.
    """
    hull = hull_indices(points) if hull is None else list(hull)
    if len(hull) < 3:
        return [False] * len(hull)
    out = []
    for q in hull:
        rest = [points[i] for i in range(len(points)) if i != q]
        out.append(len(hull_indices(rest)) != len(hull) - 1)
    return out


def nonempty_triangles_scan(points: Sequence[Point], hull: Sequence[int] | None = None) -> list[bool]:
    """Same as :func:`nonempty_triangles`, by direct point-in-triangle tests."""
    hull = hull_indices(points) if hull is None else list(hull)
    m = len(hull)
    if m < 3:
        return [False] * m
    out = []
    for i, q in enumerate(hull):
        corners = (hull[i - 1], q, hull[(i + 1) % m])
        a, b, c = (points[v] for v in corners)
        out.append(any(in_triangle(p, a, b, c)
                       for j, p in enumerate(points) if j not in corners))
    return out


def color_points_h_k3(points: Sequence[Point]) -> Coloring:
    """Two colors; every half-plane with 3 or more points sees both.

    Inner points are blue. A hull vertex is red when its ear triangle holds a
    point; the remaining hull runs alternate starting from blue.
    """
    hull = _checked(points)
    m = len(hull)
    colors = [BLUE] * len(points)
    ears = nonempty_triangles(points, hull)
    if not any(ears):
        # an odd cycle ends on red, next to the starting red vertex
        for i, v in enumerate(hull):
            colors[v] = RED if i % 2 == 0 else BLUE
    else:
        start = ears.index(True)
        ring = hull[start:] + hull[:start]
        flags = ears[start:] + ears[:start]
        parity = 0
        for v, red in zip(ring, flags):
            if red:
                colors[v] = RED
                parity = 0
            else:
                colors[v] = BLUE if parity == 0 else RED
                parity ^= 1
    if m > 2:
        assert not any(colors[hull[i]] == BLUE == colors[hull[i - 1]] for i in range(m)), \
            "two adjacent blue hull vertices"
    return Coloring(2, colors)


def check_obs20(points: Sequence[Point], col) -> bool:
    """No half-plane holds exactly two points that are both blue."""
    colors = col.colors if isinstance(col, Coloring) else col
    if len(points) < 2:
        return True
    h = enumerate_primal_halfplane(points, size=2)
    return not any(colors[a] == BLUE and colors[b] == BLUE for a, b in h.edges)
