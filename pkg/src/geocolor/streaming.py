"""Conflict-free verification without materialising the hypergraph.

The oracle in :mod:`geocolor.oracle` stores every hyperedge, which is fine
for a few hundred points but not for thousands. Here the primal hyperedges
are streamed in groups that share a structure (a common top point for
bottomless rectangles, a common pivot line for half-planes) and their color
counts come from numpy prefix sums.
"""
from __future__ import annotations

import bisect
from typing import Sequence

import numpy as np

from .geom import Family, Point, require_general_position
from .oracle import Coloring, Verdict, angular_sweep, enumerate_hyperedges, verify_cf


def _colors(col) -> np.ndarray:
    return np.asarray(col.colors if isinstance(col, Coloring) else col, dtype=np.int64)


def _prefix(onehot_rows: np.ndarray) -> np.ndarray:
    out = np.zeros((len(onehot_rows) + 1, onehot_rows.shape[1]), dtype=np.int32)
    np.cumsum(onehot_rows, axis=0, out=out[1:])
    return out


def verify_cf_bottomless_points(points: Sequence[Point], col, k: int) -> Verdict:
    """cf_k check for points against bottomless rectangles.

    Every hyperedge is an x-window of the points not above its highest member.
    """
    require_general_position(points, Family.B_POINTS)
    colors = _colors(col)
    palette = int(colors.max()) + 1 if len(colors) else 1
    eye = np.eye(palette, dtype=np.int32)
    keys: list = []
    seq: list[int] = []
    for m in sorted(range(len(points)), key=lambda i: points[i].y):
        pos = bisect.bisect_left(keys, points[m].x)
        keys.insert(pos, points[m].x)
        seq.insert(pos, m)
        pre = _prefix(eye[colors[seq]])
        ok = np.zeros((pos + 1, len(seq) - pos), dtype=bool)
        for c in np.unique(colors[seq]):
            cnt = pre[pos + 1:, c][None, :] - pre[:pos + 1, c][:, None]
            ok |= (cnt >= 1) & (cnt <= k)
        if not ok.all():
            l, r = np.argwhere(~ok)[0]
            return Verdict(False, tuple(sorted(seq[l:pos + 1 + r])))
    return Verdict(True)


def verify_cf_halfplane_points(points: Sequence[Point], col, k: int) -> Verdict:
    """cf_k check for points against half-planes: every strict left side of a
    line through two points, with any subset of the two, plus the whole set."""
    require_general_position(points, Family.H_POINTS)
    colors = _colors(col)
    n = len(points)
    palette = int(colors.max()) + 1 if n else 1
    eye = np.eye(palette, dtype=np.int32)
    whole = np.bincount(colors, minlength=palette)
    if n and not np.any((whole >= 1) & (whole <= k)):
        return Verdict(False, tuple(range(n)))
    for p in range(n):
        order, ends = angular_sweep(points, p)
        m = len(order)
        if not m:
            continue
        ring = np.array(order + order)
        pre = _prefix(eye[colors[ring]])
        starts = np.arange(1, m + 1)
        ends_arr = np.array(ends)
        base = pre[ends_arr] - pre[starts]
        with_p = eye[colors[p]][None, :]
        with_q = eye[colors[ring[:m]]]
        for extra_p in (0, 1):
            for extra_q in (0, 1):
                cnt = base + extra_p * with_p + extra_q * with_q
                nonempty = cnt.sum(axis=1) > 0
                good = np.any((cnt >= 1) & (cnt <= k), axis=1)
                bad = np.nonzero(nonempty & ~good)[0]
                if bad.size:
                    i = int(bad[0])
                    edge = [order[j % m] for j in range(i + 1, ends[i])]
                    edge += [p] * extra_p + [order[i]] * extra_q
                    return Verdict(False, tuple(sorted(edge)))
    return Verdict(True)


def verify_cf_instance(items: Sequence, family: Family | str, col, k: int) -> Verdict:
    """cf_k check, streamed where a streaming route exists."""
    family = Family(family)
    if family is Family.B_POINTS:
        return verify_cf_bottomless_points(items, col, k)
    if family is Family.H_POINTS:
        return verify_cf_halfplane_points(items, col, k)
    return verify_cf(enumerate_hyperedges(items, family), col, k)
