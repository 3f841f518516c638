"""Coloring bottomless rectangles so that deep points see two colors.

All reasoning happens on the base-line: the 2n vertical edges cut it into
elementary intervals, numbered by the edge on their left. A rectangle whose
edges sit at positions ``pa < pb`` covers intervals ``pa .. pb-1``; it lies
strictly left of interval ``t`` when ``pb <= t`` and strictly right when
``pa > t``.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .geom import BottomlessRect, Family, require_general_position
from .oracle import Coloring

RED, BLUE, GREEN = 0, 1, 2


def edge_positions(rects: Sequence[BottomlessRect]) -> tuple[list[int], list[int]]:
    """Rank of each rectangle's left and right edge among all 2n edges."""
    edges = sorted((v, i, side) for i, r in enumerate(rects) for side, v in ((0, r.a), (1, r.b)))
    pa = [0] * len(rects)
    pb = [0] * len(rects)
    for pos, (_, i, side) in enumerate(edges):
        (pa if side == 0 else pb)[i] = pos
    return pa, pb


def depth_profile(rects: Sequence[BottomlessRect], colors: Sequence[int]):
    """Per elementary interval: covering rectangle indices. Diagnostic helper."""
    pa, pb = edge_positions(rects)
    m = 2 * len(rects) - 1
    return [[i for i in range(len(rects)) if pa[i] <= t < pb[i]] for t in range(max(m, 0))]


# -- 3 colors, k = 2 ----------------------------------------------------------

def color_rects_b_k2(rects: Sequence[BottomlessRect]) -> Coloring:
    """Insert rectangles from the highest top down; red for each newcomer, then
    recolor so that no base-line point covered exactly once is red."""
    require_general_position(rects, Family.B_RECTS)
    n = len(rects)
    if not n:
        raise ValueError("need at least one rectangle")
    pa, pb = (np.array(v) for v in edge_positions(rects))
    slots = max(2 * n - 1, 1)
    count = np.zeros(slots, dtype=np.int64)
    owner = np.zeros(slots, dtype=np.int64)  # sum of covering ids; the id itself at depth 1
    colors = np.full(n, -1, dtype=np.int64)
    order = sorted(range(n), key=lambda i: rects[i].c, reverse=True)
    for step, b in enumerate(order):
        lo, hi = pa[b], pb[b]
        count[lo:hi] += 1
        owner[lo:hi] += b
        if step == 0:
            colors[b] = BLUE
            continue
        colors[b] = RED
        alone = np.nonzero(count[lo:hi] == 1)[0]
        if alone.size == 0:
            continue
        q = lo + int(alone[0])
        _settle_side(colors, count, owner, pa, pb, q, left=True)
        _settle_side(colors, count, owner, pa, pb, q, left=False)
        _swap(colors, colors >= 0, GREEN, RED)
    return Coloring(3, colors.tolist())


def _swap(colors, mask, c1, c2):
    a = mask & (colors == c1)
    b = mask & (colors == c2)
    colors[a] = c2
    colors[b] = c1


def _settle_side(colors, count, owner, pa, pb, q, left):
    """Remove green from once-covered intervals on one side of interval ``q``."""
    span = np.arange(q) if left else np.arange(q + 1, len(count))
    singles = span[count[span] == 1]
    # the newcomer may own further once-covered intervals; those stay red here
    singles = singles[colors[owner[singles]] != RED]
    if singles.size == 0:
        return
    single_colors = colors[owner[singles]]
    if not np.any(single_colors == GREEN):
        return
    placed = colors >= 0
    beyond_q = (pb <= q) if left else (pa > q)
    near = -1 if left else 0
    if single_colors[near] == GREEN:
        _swap(colors, placed & beyond_q, BLUE, GREEN)
    assert colors[owner[singles[near]]] == BLUE
    s = int(singles[near])
    beyond_s = (pb <= s) if left else (pa > s)
    _swap(colors, placed & beyond_s, RED, GREEN)


def single_cover_colors(rects: Sequence[BottomlessRect], col) -> list[int]:
    """Colors of the rectangles covering a base-line interval alone."""
    colors = col.colors if isinstance(col, Coloring) else col
    return [colors[c[0]] for c in depth_profile(rects, colors) if len(c) == 1]


# -- 2 colors, k = 3 ----------------------------------------------------------

def color_rects_b_k3(rects: Sequence[BottomlessRect]) -> Coloring:
    """Divide at a base-line point of depth at most 2 when one splits the family;
    otherwise peel off the lowest one or two rectangles and recurse."""
    require_general_position(rects, Family.B_RECTS)
    n = len(rects)
    if not n:
        raise ValueError("need at least one rectangle")
    edges = sorted((v, i, side) for i, r in enumerate(rects) for side, v in ((0, r.a), (1, r.b)))
    tops = [r.c for r in rects]
    result = _trampoline(_solve(frozenset(range(n)), edges, tops))
    return Coloring(2, [result[i] for i in range(n)])


def _trampoline(root):
    stack = [root]
    value = None
    while stack:
        try:
            child = stack[-1].send(value)
        except StopIteration as done:
            stack.pop()
            value = done.value
        else:
            stack.append(child)
            value = None
    return value


def _flip(col: dict) -> dict:
    return {i: 1 - c for i, c in col.items()}


def _solve(ids: frozenset, all_edges, tops):
    # generator: yields sub-problems, receives their colorings
    if not ids:
        return {}
    if len(ids) == 1:
        return {next(iter(ids)): RED}
    edges = [(i, side) for _, i, side in all_edges if i in ids]
    pa, pb = {}, {}
    for pos, (i, side) in enumerate(edges):
        (pa if side == 0 else pb)[i] = pos

    active: set[int] = set()
    closed: list[int] = []
    for t in range(len(edges) - 1):
        i, side = edges[t]
        if side == 0:
            active.add(i)
        else:
            active.discard(i)
            closed.append(i)
        opened = len(active) + len(closed)
        if len(active) > 2 or not closed or opened == len(ids):
            continue
        left = frozenset(closed)
        right = ids - left - active
        shared = sorted(active)
        if not shared:
            a = yield _solve(left, all_edges, tops)
            b = yield _solve(right, all_edges, tops)
            return {**a, **b}
        a = yield _solve(left | active, all_edges, tops)
        b = yield _solve(right | active, all_edges, tops)
        if len(shared) == 2:
            assert a[shared[0]] != a[shared[1]] and b[shared[0]] != b[shared[1]], \
                "two rectangles alone on a base-line point got the same color"
        if a[shared[0]] != RED:
            a = _flip(a)
        if b[shared[0]] != RED:
            b = _flip(b)
        return {**a, **b}

    last = len(edges) - 2
    l1, l2, r2, r1 = 0, 1, last - 1, last

    def covers(i, t):
        return pa[i] <= t < pb[i]

    def others_on(t, skip):
        return [j for j in sorted(ids) if j not in skip and covers(j, t)]

    lowest = sorted(ids, key=tops.__getitem__)
    b, b2 = lowest[0], lowest[1]
    b_left = covers(b, l1) or covers(b, l2)
    b_right = covers(b, r1) or covers(b, r2)
    if not b_left and not b_right:
        col = yield _solve(ids - {b}, all_edges, tops)
        col[b] = RED
        return col
    if b_left != b_right:
        col = yield _solve(ids - {b}, all_edges, tops)
        mates = others_on(l2 if b_left else r2, {b})
        col[b] = 1 - col[mates[0]] if mates else RED
        return col
    b2_left = covers(b2, l1) or covers(b2, l2)
    b2_right = covers(b2, r1) or covers(b2, r2)
    if not b2_left and not b2_right:
        col = yield _solve(ids - {b2}, all_edges, tops)
        col[b2] = col[b]
        return col
    col = yield _solve(ids - {b, b2}, all_edges, tops)
    # the side B2 does not reach (the right one when it reaches both)
    third = others_on(r2 if b2_left else l2, {b, b2})
    col[b] = 1 - col[third[0]] if third else RED
    col[b2] = 1 - col[b]
    return col


def two_cover_bichromatic(rects: Sequence[BottomlessRect], col) -> bool:
    """Every base-line interval covered by exactly two rectangles sees both colors."""
    colors = col.colors if isinstance(col, Coloring) else col
    return all(colors[c[0]] != colors[c[1]] for c in depth_profile(rects, colors) if len(c) == 2)
