"""Coloring points against bottomless rectangles with upward sweeps.

Both sweeps need, for each point, its x-neighbours among the points below it.
These are computed offline: delete the points from an x-sorted linked list
from the top down; at the moment a point is deleted, its list neighbours are
exactly the lower points adjacent to it in x.
"""
from __future__ import annotations

from typing import Callable, Sequence

from .geom import Family, Point, require_general_position
from .oracle import Coloring


def insertion_neighbours(points: Sequence[Point]) -> tuple[list[int], list[int], list[int]]:
    """Upward order plus, per point, its left/right x-neighbour among lower points (-1 if none)."""
    n = len(points)
    by_x = sorted(range(n), key=lambda i: points[i].x)
    left = [-1] * n
    right = [-1] * n
    for a, b in zip(by_x, by_x[1:]):
        right[a] = b
        left[b] = a
    up = sorted(range(n), key=lambda i: points[i].y)
    below_left = [-1] * n
    below_right = [-1] * n
    for p in reversed(up):
        l, r = left[p], right[p]
        below_left[p], below_right[p] = l, r
        if l >= 0:
            right[l] = r
        if r >= 0:
            left[r] = l
    return up, below_left, below_right


def color_points_b_k2(points: Sequence[Point]) -> Coloring:
    """3 colors, no hyperedge of size >= 2 monochromatic.

    Each point, met in upward order, avoids the colors of its current
    x-neighbours, so x-adjacent points of every y-prefix differ.
    """
    require_general_position(points, Family.B_POINTS)
    if not points:
        raise ValueError("need at least one point")
    up, nl, nr = insertion_neighbours(points)
    colors = [0] * len(points)
    for p in up:
        taken = {colors[q] for q in (nl[p], nr[p]) if q >= 0}
        colors[p] = min(c for c in range(3) if c not in taken)
    return Coloring(3, colors)


def color_points_b_k4(points: Sequence[Point],
                      observer: Callable[[int, list], None] | None = None) -> Coloring:
    """2 colors, no hyperedge of size >= 4 monochromatic.

    Invariant kept after every insertion: no two x-adjacent processed points
    are both uncolored, and the colored ones alternate in x-order.
    ``observer(p, colors)`` sees the state (``None`` = uncolored) after each step.
    """
    require_general_position(points, Family.B_POINTS)
    n = len(points)
    if not n:
        raise ValueError("need at least one point")
    up, nl, nr = insertion_neighbours(points)
    colors: list[int | None] = [None] * n
    left = [-1] * n
    right = [-1] * n
    for step, p in enumerate(up):
        l, r = nl[p], nr[p]
        left[p], right[p] = l, r
        if l >= 0:
            right[l] = p
        if r >= 0:
            left[r] = p
        if step == 0:
            colors[p] = 0
        elif l >= 0 and colors[l] is None:
            _color_pair(colors, l, p, left[l], r)
        elif r >= 0 and colors[r] is None:
            _color_pair(colors, p, r, l, right[r])
        if observer is not None:
            observer(p, list(colors))
    return Coloring(2, [0 if c is None else c for c in colors])


def _color_pair(colors, u, v, outer_left, outer_right):
    # u, v are x-adjacent and uncolored; their outer neighbours are colored
    a = colors[outer_left] if outer_left >= 0 else None
    b = colors[outer_right] if outer_right >= 0 else None
    assert outer_left < 0 or a is not None, "uncolored neighbours left of a new pair"
    assert outer_right < 0 or b is not None, "uncolored neighbours right of a new pair"
    if a is not None and b is not None:
        assert a != b, "colored points stopped alternating"
        colors[u], colors[v] = 1 - a, 1 - b
    elif a is not None:
        colors[u], colors[v] = 1 - a, a
    elif b is not None:
        colors[u], colors[v] = b, 1 - b
    else:
        colors[u], colors[v] = 0, 1
