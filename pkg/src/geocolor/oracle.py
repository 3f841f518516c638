"""Brute-force hyperedge enumeration and coloring verification.

Each setting has two enumeration routes that share no code: a structured
``enumerate_*`` function and a definition-level ``sample_*`` function that
tests membership directly on a grid of witness points (or, for half-planes
in the primal, on convex-hull disjointness of every subset). They are test
tools and favour obviousness over speed, except where noted.
"""
from __future__ import annotations

import bisect
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from math import lcm
from typing import Iterable, Sequence

from .geom import (
    BaselineRect,
    BottomlessRect,
    Family,
    HalfPlane,
    Point,
    Region,
    convex_hull,
    cross,
    hull_indices,
    require_general_position,
)

Edge = tuple[int, ...]


@dataclass
class Hypergraph:
    vertex_count: int
    edges: set[Edge] = field(default_factory=set)
    witnesses: dict = field(default_factory=dict, repr=False, compare=False)

    def add(self, members: Iterable[int], witness=None) -> None:
        edge = tuple(sorted(members))
        if not edge:
            return
        if edge[-1] >= self.vertex_count or edge[0] < 0:
            raise ValueError(f"hyperedge {edge} out of range")
        if edge not in self.edges:
            self.edges.add(edge)
            if witness is not None:
                self.witnesses[edge] = witness

    def at_least(self, k: int) -> list[Edge]:
        return sorted(e for e in self.edges if len(e) >= k)

    def __contains__(self, edge) -> bool:
        return tuple(sorted(edge)) in self.edges

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(sorted(self.edges))


@dataclass(frozen=True)
class Coloring:
    palette_size: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.palette_size < 1:
            raise ValueError("palette must be positive")
        for c in self.colors:
            if not 0 <= c < self.palette_size:
                raise ValueError(f"color {c} outside palette of size {self.palette_size}")

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, i: int) -> int:
        return self.colors[i]

    def used(self) -> int:
        return len(set(self.colors))

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, c in enumerate(self.colors):
            out.setdefault(c, []).append(i)
        return out


@dataclass(frozen=True)
class Verdict:
    valid: bool
    witness: Edge | None = None
    region: object = None

    def __bool__(self) -> bool:
        return self.valid


# -- verification --------------------------------------------------------------

def _colors_of(col) -> Sequence[int]:
    return col.colors if isinstance(col, Coloring) else col


def verify_kproper(h: Hypergraph, col, k: int) -> Verdict:
    """No hyperedge with at least ``k`` vertices may be monochromatic."""
    colors = _colors_of(col)
    if len(colors) != h.vertex_count:
        raise ValueError(f"coloring has {len(colors)} entries for {h.vertex_count} vertices")
    for edge in sorted(h.edges):
        if len(edge) >= k and len({colors[v] for v in edge}) == 1:
            return Verdict(False, edge, h.witnesses.get(edge))
    return Verdict(True)


def verify_cf(h: Hypergraph, col, k: int) -> Verdict:
    """Every nonempty hyperedge needs a color used between 1 and ``k`` times in it."""
    colors = _colors_of(col)
    if len(colors) != h.vertex_count:
        raise ValueError(f"coloring has {len(colors)} entries for {h.vertex_count} vertices")
    for edge in sorted(h.edges):
        counts: dict[int, int] = {}
        for v in edge:
            counts[colors[v]] = counts.get(colors[v], 0) + 1
        if not any(1 <= c <= k for c in counts.values()):
            return Verdict(False, edge, h.witnesses.get(edge))
    return Verdict(True)


def check_monotonicity(source, family: Family | str | None = None) -> bool:
    """Every hyperedge ``E`` has sub-hyperedges of every size ``l <= |E|``.

    ``source`` is a hypergraph, or a ground set enumerated under ``family``.
    Checking one level down suffices: the chain then continues by induction.
    """
    h = source if isinstance(source, Hypergraph) else enumerate_hyperedges(source, family)
    for edge in h.edges:
        if len(edge) < 2:
            continue
        if not any(edge[:i] + edge[i + 1:] in h.edges for i in range(len(edge))):
            return False
    return True


def hull_consecutive(points: Sequence[Point], h: Hypergraph) -> bool:
    """Each hyperedge meets the hull, in a cyclically consecutive run of vertices."""
    ring = hull_indices(points)
    pos = {v: i for i, v in enumerate(ring)}
    m = len(ring)
    for edge in h.edges:
        on = sorted(pos[v] for v in edge if v in pos)
        if not on:
            return False
        if len(on) == m:
            continue
        # consecutive on a cycle <=> exactly one gap between chosen positions
        breaks = sum(1 for a, b in zip(on, on[1:] + [on[0] + m]) if b - a > 1)
        if breaks != 1:
            return False
    return True


# -- bottomless rectangles, primal --------------------------------------------

def _gap_points(values: Sequence) -> list:
    """One value below, between each consecutive pair, and above ``values``."""
    vs = sorted(set(values))
    if not vs:
        return [0]
    mids = [Fraction(a + b, 2) for a, b in zip(vs, vs[1:])]
    return [vs[0] - 1] + mids + [vs[-1] + 1]


def _next_above(sorted_vals: Sequence, v):
    i = bisect.bisect_right(sorted_vals, v)
    return Fraction(v + sorted_vals[i], 2) if i < len(sorted_vals) else v + 1


def _next_below(sorted_vals: Sequence, v):
    i = bisect.bisect_left(sorted_vals, v)
    return Fraction(v + sorted_vals[i - 1], 2) if i > 0 else v - 1


def enumerate_primal_bottomless(points: Sequence[Point], size: int | None = None) -> Hypergraph:
    """Hyperedges cut out of ``points`` by bottomless rectangles.

    Full enumeration walks every x-window and every threshold point inside it.
    With ``size`` only hyperedges of exactly that size are produced, using the
    highest point of each hyperedge as its anchor (O(n^2) for fixed size).
    """
    require_general_position(points, Family.B_POINTS)
    n = len(points)
    h = Hypergraph(n)
    xs = sorted(p.x for p in points)
    ys = sorted(p.y for p in points)

    def witness(left, right, top):
        a = _next_below(xs, points[left].x)
        b = _next_above(xs, points[right].x)
        return BottomlessRect(a, b, _next_above(ys, points[top].y))

    by_x = sorted(range(n), key=lambda i: points[i].x)
    if size is None:
        for i in range(n):
            for j in range(i, n):
                window = sorted(by_x[i:j + 1], key=lambda v: points[v].y)
                for t in range(len(window)):
                    h.add(window[:t + 1], witness(by_x[i], by_x[j], window[t]))
        return h
    seq: list[int] = []
    keys: list = []
    for m in sorted(range(n), key=lambda i: points[i].y):
        pos = bisect.bisect_left(keys, points[m].x)
        keys.insert(pos, points[m].x)
        seq.insert(pos, m)
        for s in range(max(0, pos - size + 1), min(pos, len(seq) - size) + 1):
            window = seq[s:s + size]
            h.add(window, witness(window[0], window[-1], m))
    return h


def sample_primal_bottomless(points: Sequence[Point]) -> Hypergraph:
    """Definition-level: try every rectangle with sides in the coordinate gaps."""
    h = Hypergraph(len(points))
    xg = _gap_points([p.x for p in points])
    yg = _gap_points([p.y for p in points])
    for a, b in itertools.combinations(xg, 2):
        for c in yg:
            r = BottomlessRect(a, b, c)
            h.add([i for i, p in enumerate(points) if r.contains(p)], r)
    return h


# -- half-planes, primal ------------------------------------------------------

def _angle_key(d):
    dx, dy = d
    upper = dy > 0 or (dy == 0 and dx > 0)
    ang = math.atan2(float(dy), float(dx))
    if ang < 0 or (not upper and ang == 0):
        ang += 2 * math.pi
    return (0 if upper else 1, ang)


def _cross2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def angular_order(points: Sequence[Point], pivot: int) -> list[int]:
    """Other indices sorted counter-clockwise by direction from ``points[pivot]``.

    Sorted by float angle, then certified with exact cross products; falls
    back to an exact comparison sort if the float order is wrong anywhere.
    """
    p = points[pivot]
    dirs = {i: (q.x - p.x, q.y - p.y) for i, q in enumerate(points) if i != pivot}
    keyed = {i: _angle_key(d) for i, d in dirs.items()}
    order = sorted(dirs, key=keyed.__getitem__)
    ok = all(
        keyed[a][0] != keyed[b][0] or _cross2(dirs[a], dirs[b]) > 0
        for a, b in zip(order, order[1:])
    )
    if ok:
        return order

    def cmp(a, b):
        ha, hb = keyed[a][0], keyed[b][0]
        if ha != hb:
            return ha - hb
        c = _cross2(dirs[a], dirs[b])
        return -1 if c > 0 else (1 if c < 0 else 0)

    return sorted(dirs, key=cmp_to_key(cmp))


def angular_sweep(points: Sequence[Point], pivot: int) -> tuple[list[int], list[int]]:
    """For each other point ``q`` in angular order around the pivot, the end of
    the run of points strictly left of the directed line pivot->q.

    Returns ``(order, ends)``: the left side of ``order[i]`` is
    ``(order + order)[i + 1:ends[i]]``.
    """
    order = angular_order(points, pivot)
    m = len(order)
    p = points[pivot]
    ends = []
    e = 0
    for i in range(m):
        q = points[order[i]]
        e = max(e, i + 1)
        while e < i + m and cross(p, q, points[order[e % m]]) > 0:
            e += 1
        ends.append(e)
    return order, ends


def enumerate_primal_halfplane(points: Sequence[Point], size: int | None = None) -> Hypergraph:
    """Hyperedges cut out of ``points`` by open half-planes.

    For every ordered pair (p, q) the strict left side S of the line p->q is
    realisable together with any subset of {p, q}; with the whole set this is
    complete in general position.
    """
    require_general_position(points, Family.H_POINTS)
    n = len(points)
    h = Hypergraph(n)
    if size is None or size == n:
        h.add(range(n), "all")
    for p in range(n):
        order, ends = angular_sweep(points, p)
        m = len(order)
        for i, q in enumerate(order):
            count = ends[i] - i - 1
            if size is not None and not size - 2 <= count <= size:
                continue
            left = [order[j % m] for j in range(i + 1, ends[i])]
            for extra in ((), (p,), (q,), (p, q)):
                if size is None or count + len(extra) == size:
                    h.add(left + list(extra), ("line", p, q, extra))
    return h


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    return (cross(a, b, p) == 0 and min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def _segments_meet(a: Point, b: Point, c: Point, d: Point) -> bool:
    d1, d2 = cross(a, b, c), cross(a, b, d)
    d3, d4 = cross(c, d, a), cross(c, d, b)
    if ((d1 > 0 > d2) or (d1 < 0 < d2)) and ((d3 > 0 > d4) or (d3 < 0 < d4)):
        return True
    return (_on_segment(c, a, b) or _on_segment(d, a, b)
            or _on_segment(a, c, d) or _on_segment(b, c, d))


def _in_hull(p: Point, hull: Sequence[Point]) -> bool:
    if len(hull) == 1:
        return p == hull[0]
    if len(hull) == 2:
        return _on_segment(p, hull[0], hull[1])
    m = len(hull)
    return all(cross(hull[i], hull[(i + 1) % m], p) <= 0 for i in range(m))


def convex_sets_disjoint(a: Sequence[Point], b: Sequence[Point]) -> bool:
    """Exact test that the closed convex hulls of ``a`` and ``b`` do not meet."""
    ha, hb = convex_hull(a), convex_hull(b)
    if any(_in_hull(p, hb) for p in ha) or any(_in_hull(p, ha) for p in hb):
        return False
    ea = list(zip(ha, ha[1:] + ha[:1])) if len(ha) > 1 else []
    eb = list(zip(hb, hb[1:] + hb[:1])) if len(hb) > 1 else []
    return not any(_segments_meet(p, q, r, s) for p, q in ea for r, s in eb)


def sample_primal_halfplane(points: Sequence[Point]) -> Hypergraph:
    """Definition-level: a subset is a hyperedge iff its hull misses the rest's hull.

    Works for any finite point set, degenerate or not; exponential in n.
    """
    n = len(points)
    h = Hypergraph(n)
    for mask in range(1, 1 << n):
        inside = [i for i in range(n) if mask >> i & 1]
        outside = [i for i in range(n) if not mask >> i & 1]
        if not outside or convex_sets_disjoint([points[i] for i in inside],
                                               [points[i] for i in outside]):
            h.add(inside)
    return h


# -- bottomless rectangles, dual ----------------------------------------------

def _ranks(values: Sequence) -> dict:
    return {v: 2 * i for i, v in enumerate(sorted(set(values)))}


def enumerate_dual_bottomless(rects: Sequence[BottomlessRect]) -> Hypergraph:
    """Covering sets of the plane's points, sampled between consecutive edges."""
    require_general_position(rects, Family.B_RECTS)
    n = len(rects)
    h = Hypergraph(n)
    xvals = sorted({v for r in rects for v in (r.a, r.b)})
    tops = sorted({r.c for r in rects})
    xr, yr = _ranks(xvals), _ranks(tops)
    ra = [xr[r.a] for r in rects]
    rb = [xr[r.b] for r in rects]
    rc = [yr[r.c] for r in rects]
    for xi in range(len(xvals) - 1):
        xs = 2 * xi + 1
        active = [i for i in range(n) if ra[i] < xs < rb[i]]
        for yi in range(-1, len(tops) - 1):
            ys = 2 * yi + 1
            members = [i for i in active if ys < rc[i]]
            if members and tuple(members) not in h.edges:
                y = tops[0] - 1 if yi < 0 else Fraction(tops[yi] + tops[yi + 1], 2)
                h.add(members, Point(Fraction(xvals[xi] + xvals[xi + 1], 2), y))
    return h


def _fine_grid(values: Sequence) -> list:
    vs = sorted(set(values))
    out = [vs[0] - 1]
    for a, b in zip(vs, vs[1:]):
        out.extend(a + (b - a) * Fraction(j, 4) for j in (1, 2, 3))
    out.append(vs[-1] + 1)
    return out


def sample_dual_bottomless(rects: Sequence[BottomlessRect]) -> Hypergraph:
    """Definition-level: direct membership on a quarter-step grid."""
    h = Hypergraph(len(rects))
    for x in _fine_grid([v for r in rects for v in (r.a, r.b)]):
        for y in _fine_grid([r.c for r in rects]):
            p = Point(x, y)
            h.add([i for i, r in enumerate(rects) if r.contains(p)], p)
    return h


# -- rectangles crossing the base-line ----------------------------------------

def enumerate_primal_baseline(points: Sequence[Point], size: int | None = None) -> Hypergraph:
    """Hyperedges cut out by rectangles crossing ``y = 0``.

    Full enumeration: every x-window, every top threshold among its upper
    points, every bottom threshold among its lower points. With ``size``, the
    topmost and bottommost members anchor the hyperedge.
    """
    require_general_position(points, Family.BPRIME_POINTS)
    n = len(points)
    h = Hypergraph(n)
    xs = sorted(p.x for p in points)
    ys = sorted([p.y for p in points] + [0])

    def witness(left, right, top, bottom):
        a = _next_below(xs, points[left].x)
        b = _next_above(xs, points[right].x)
        t = _next_above(ys, points[top].y if top is not None else 0)
        bt = _next_below(ys, points[bottom].y if bottom is not None else 0)
        return BaselineRect(a, b, bt, t)

    by_x = sorted(range(n), key=lambda i: points[i].x)
    if size is None:
        for i in range(n):
            for j in range(i, n):
                window = by_x[i:j + 1]
                up = sorted((v for v in window if points[v].y > 0), key=lambda v: points[v].y)
                down = sorted((v for v in window if points[v].y < 0), key=lambda v: -points[v].y)
                for t in range(len(up) + 1):
                    for b in range(len(down) + 1):
                        members = up[:t] + down[:b]
                        if members:
                            h.add(members, witness(by_x[i], by_x[j],
                                                   up[t - 1] if t else None,
                                                   down[b - 1] if b else None))
        return h
    up = sorted((v for v in range(n) if points[v].y > 0), key=lambda v: points[v].y)
    down = sorted((v for v in range(n) if points[v].y < 0), key=lambda v: -points[v].y)
    keys: list = []
    seq: list[int] = []
    for t in [None] + up:
        if t is not None:
            pos = bisect.bisect_left(keys, points[t].x)
            keys.insert(pos, points[t].x)
            seq.insert(pos, t)
        k2, s2 = list(keys), list(seq)
        for b in [None] + down:
            if b is not None:
                pos = bisect.bisect_left(k2, points[b].x)
                k2.insert(pos, points[b].x)
                s2.insert(pos, b)
            anchors = [bisect.bisect_left(k2, points[v].x) for v in (t, b) if v is not None]
            if not anchors:
                continue
            lo, hi = min(anchors), max(anchors)
            for s in range(max(0, hi - size + 1), min(lo, len(s2) - size) + 1):
                window = s2[s:s + size]
                h.add(window, witness(window[0], window[-1], t, b))
    return h


def sample_primal_baseline(points: Sequence[Point]) -> Hypergraph:
    h = Hypergraph(len(points))
    xg = _gap_points([p.x for p in points])
    pos = sorted({p.y for p in points if p.y > 0} | {0})
    neg = sorted({p.y for p in points if p.y < 0} | {0})
    tops = [Fraction(a + b, 2) for a, b in zip(pos, pos[1:])] + [pos[-1] + 1]
    bottoms = [neg[0] - 1] + [Fraction(a + b, 2) for a, b in zip(neg, neg[1:])]
    for a, b in itertools.combinations(xg, 2):
        for t in tops:
            for bt in bottoms:
                r = BaselineRect(a, b, bt, t)
                h.add([i for i, p in enumerate(points) if r.contains(p)], r)
    return h


def enumerate_dual_baseline(rects: Sequence[BaselineRect]) -> Hypergraph:
    """Like the bottomless dual grid, with bottom edges joining the y-samples."""
    require_general_position(rects, Family.BPRIME_RECTS)
    n = len(rects)
    h = Hypergraph(n)
    xvals = sorted({v for r in rects for v in (r.a, r.b)})
    yvals = sorted({v for r in rects for v in (r.bottom, r.top)})
    xr, yr = _ranks(xvals), _ranks(yvals)
    ra = [xr[r.a] for r in rects]
    rb = [xr[r.b] for r in rects]
    rlo = [yr[r.bottom] for r in rects]
    rhi = [yr[r.top] for r in rects]
    for xi in range(len(xvals) - 1):
        xs = 2 * xi + 1
        active = [i for i in range(n) if ra[i] < xs < rb[i]]
        for yi in range(len(yvals) - 1):
            ys = 2 * yi + 1
            members = [i for i in active if rlo[i] < ys < rhi[i]]
            if members and tuple(members) not in h.edges:
                h.add(members, Point(Fraction(xvals[xi] + xvals[xi + 1], 2),
                                     Fraction(yvals[yi] + yvals[yi + 1], 2)))
    return h


def sample_dual_baseline(rects: Sequence[BaselineRect]) -> Hypergraph:
    h = Hypergraph(len(rects))
    for x in _fine_grid([v for r in rects for v in (r.a, r.b)]):
        for y in _fine_grid([v for r in rects for v in (r.bottom, r.top)] + [0]):
            p = Point(x, y)
            h.add([i for i, r in enumerate(rects) if r.contains(p)], p)
    return h


# -- half-planes, dual --------------------------------------------------------

def _integer_lines(halfplanes: Sequence[HalfPlane]):
    # scale y by the common denominator so every boundary has integer coefficients
    den = 1
    for hp in halfplanes:
        den = lcm(den, Fraction(hp.slope).denominator, Fraction(hp.intercept).denominator)
    return [(int(hp.slope * den), int(hp.intercept * den)) for hp in halfplanes]


def enumerate_dual_halfplane(halfplanes: Sequence[HalfPlane]) -> Hypergraph:
    """Covering sets of the arrangement's faces.

    Around each crossing of two boundaries all four sign patterns of those two
    occur, on top of the fixed membership in the other half-planes (no other
    boundary passes through the crossing). Faces without a vertex are
    unbounded and are read off the vertical order of the lines at x = +/-inf.
    """
    require_general_position(halfplanes, Family.H_RECTS)
    n = len(halfplanes)
    h = Hypergraph(n)
    lines = _integer_lines(halfplanes)
    above = [hp.region is Region.ABOVE for hp in halfplanes]
    for i, j in itertools.combinations(range(n), 2):
        si, ti = lines[i]
        sj, tj = lines[j]
        den = si - sj
        if den == 0:
            continue
        num = tj - ti
        flip = 1 if den > 0 else -1
        base = []
        for l in range(n):
            if l == i or l == j:
                continue
            sl, tl = lines[l]
            # sign of (vertex height - line l) at the crossing
            side = ((si - sl) * num + (ti - tl) * den) * flip
            if (side > 0) == above[l]:
                base.append(l)
        for extra in ((), (i,), (j,), (i, j)):
            h.add(base + list(extra), ("vertex", i, j, extra))
    for sign in (1, -1):
        order = sorted(range(n), key=lambda l: (sign * lines[l][0], lines[l][1]))
        for r in range(n + 1):
            members = [l for q, l in enumerate(order) if (q < r) == above[l]]
            h.add(members, ("far", sign, r))
    return h


def sample_dual_halfplane(halfplanes: Sequence[HalfPlane]) -> Hypergraph:
    """Definition-level: vertical slabs between crossing abscissae, sampled
    between consecutive boundaries with direct membership tests."""
    n = len(halfplanes)
    h = Hypergraph(n)
    xs = set()
    for a, b in itertools.combinations(halfplanes, 2):
        if a.slope != b.slope:
            xs.add(Fraction(b.intercept - a.intercept) / (a.slope - b.slope))
    for x in _gap_points(list(xs)):
        heights = sorted(hp.slope * x + hp.intercept for hp in halfplanes)
        for y in _gap_points(heights):
            p = Point(x, y)
            h.add([i for i, hp in enumerate(halfplanes) if hp.contains(p)], p)
    return h


# -- dispatch -----------------------------------------------------------------

_ENUMERATORS = {
    Family.B_POINTS: enumerate_primal_bottomless,
    Family.B_RECTS: enumerate_dual_bottomless,
    Family.H_POINTS: enumerate_primal_halfplane,
    Family.H_RECTS: enumerate_dual_halfplane,
    Family.BPRIME_POINTS: enumerate_primal_baseline,
    Family.BPRIME_RECTS: enumerate_dual_baseline,
}

_SAMPLERS = {
    Family.B_POINTS: sample_primal_bottomless,
    Family.B_RECTS: sample_dual_bottomless,
    Family.H_POINTS: sample_primal_halfplane,
    Family.H_RECTS: sample_dual_halfplane,
    Family.BPRIME_POINTS: sample_primal_baseline,
    Family.BPRIME_RECTS: sample_dual_baseline,
}


def enumerate_hyperedges(items: Sequence, family: Family | str) -> Hypergraph:
    return _ENUMERATORS[Family(family)](items)


def sample_hyperedges(items: Sequence, family: Family | str) -> Hypergraph:
    return _SAMPLERS[Family(family)](items)


def verify_instance(items: Sequence, family: Family | str, col, k: int) -> Verdict:
    """k-proper check against the oracle.

    The primal families are monotone, so only hyperedges of size exactly ``k``
    need checking; those are enumerated directly, which keeps large primal
    instances cheap. Dual families use the full enumeration.
    """
    family = Family(family)
    if family.is_primal:
        if k > len(items):
            return Verdict(True)
        return verify_kproper(_ENUMERATORS[family](items, size=k), col, k)
    return verify_kproper(_ENUMERATORS[family](items), col, k)
