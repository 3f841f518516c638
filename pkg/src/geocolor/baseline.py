"""Rectangles crossing the base-line ``y = 0``, reduced to bottomless ones.

Above the line such a rectangle acts like a bottomless rectangle; below it,
like a bottomless rectangle after the mirror ``(x, y) -> (x, -y)``.
"""
from __future__ import annotations

from typing import Callable, Sequence

from .bottomless_dual import color_rects_b_k3
from .bottomless_primal import color_points_b_k2, color_points_b_k4
from .geom import BaselineRect, Family, Point, require_general_position
from .oracle import Coloring


def mirror(p: Point) -> Point:
    return Point(p.x, -p.y)


def color_rects_bprime_k3(rects: Sequence[BaselineRect]) -> Coloring:
    """4 colors: the pair (upper color, lower color) of two bottomless colorings."""
    require_general_position(rects, Family.BPRIME_RECTS)
    if not rects:
        raise ValueError("need at least one rectangle")
    up = color_rects_b_k3([r.upper() for r in rects])
    down = color_rects_b_k3([r.lower_mirrored() for r in rects])
    return Coloring(4, [2 * u + d for u, d in zip(up.colors, down.colors)])


def _by_side(points: Sequence[Point], algo: Callable, offsets: tuple[int, int],
             palette: int) -> Coloring:
    require_general_position(points, Family.BPRIME_POINTS)
    if not points:
        raise ValueError("need at least one point")
    colors = [0] * len(points)
    above = [i for i, p in enumerate(points) if p.y > 0]
    below = [i for i, p in enumerate(points) if p.y < 0]
    for idx, pts, shift in ((above, [points[i] for i in above], offsets[0]),
                            (below, [mirror(points[i]) for i in below], offsets[1])):
        if idx:
            for i, c in zip(idx, algo(pts).colors):
                colors[i] = c + shift
    return Coloring(palette, colors)


def color_points_bprime_k2(points: Sequence[Point]) -> Coloring:
    """6 colors: separate 3-color sweeps above and (mirrored) below."""
    return _by_side(points, color_points_b_k2, (0, 3), 6)


def color_points_bprime_k3(points: Sequence[Point]) -> Coloring:
    """3 colors: both sides share the 3-color sweep palette."""
    return _by_side(points, color_points_b_k2, (0, 0), 3)


def color_points_bprime_k7(points: Sequence[Point]) -> Coloring:
    """2 colors: both sides use the alternation sweep."""
    return _by_side(points, color_points_b_k4, (0, 0), 2)
