"""SVG drawings of instances, optionally color-coded by a coloring.

Floats are fine here: nothing drawn feeds back into a predicate.
"""
from __future__ import annotations

import itertools
from xml.sax.saxutils import escape

from .geom import BaselineRect, BottomlessRect, Family, HalfPlane, Region
from .instances import Instance

PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
           "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")
SIZE = 480


def _bbox(inst: Instance):
    xs, ys = [], []
    for it in inst.items:
        if isinstance(it, BottomlessRect):
            xs += [it.a, it.b]
            ys += [it.c]
        elif isinstance(it, BaselineRect):
            xs += [it.a, it.b]
            ys += [it.bottom, it.top]
        elif isinstance(it, HalfPlane):
            pass
        else:
            xs.append(it.x)
            ys.append(it.y)
    if inst.family is Family.H_RECTS:
        for h, g in itertools.combinations(inst.items, 2):
            if h.slope != g.slope:
                x = (g.intercept - h.intercept) / (h.slope - g.slope)
                xs.append(x)
                ys.append(h.slope * x + h.intercept)
        for h in inst.items:
            ys.append(h.intercept)
        xs.append(0)
    if inst.family is Family.B_RECTS:
        ys.append(min(ys) - 1)
    if inst.family.value.startswith("bprime"):
        ys.append(0)
    xs = [float(v) for v in xs] or [0.0]
    ys = [float(v) for v in ys] or [0.0]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w, h = max(x1 - x0, 1.0), max(y1 - y0, 1.0)
    return x0 - 0.2 * w, x1 + 0.2 * w, y0 - 0.2 * h, y1 + 0.2 * h


def _clip(poly, a, b, c):
    """Keep the part of ``poly`` with a*x + b*y + c >= 0."""
    out = []
    for (px, py), (qx, qy) in zip(poly, poly[1:] + poly[:1]):
        fp, fq = a * px + b * py + c, a * qx + b * qy + c
        if fp >= 0:
            out.append((px, py))
        if (fp >= 0) != (fq >= 0):
            t = fp / (fp - fq)
            out.append((px + t * (qx - px), py + t * (qy - py)))
    return out


def render_svg(inst: Instance, coloring=None) -> str:
    x0, x1, y0, y1 = _bbox(inst)
    sx, sy = SIZE / (x1 - x0), SIZE / (y1 - y0)

    def tx(x):
        return (float(x) - x0) * sx

    def ty(y):
        return SIZE - (float(y) - y0) * sy

    def fill(i):
        if coloring is None:
            return "#999999"
        return PALETTE[coloring.colors[i] % len(PALETTE)]

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
             f'viewBox="0 0 {SIZE} {SIZE}">',
             f'<title>{escape(inst.family.value)}</title>',
             f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>']
    if inst.family.value.startswith("bprime"):
        parts.append(f'<line x1="0" y1="{ty(0):.2f}" x2="{SIZE}" y2="{ty(0):.2f}" '
                     'stroke="black" stroke-dasharray="4 3"/>')
    for i, it in enumerate(inst.items):
        col = fill(i)
        if isinstance(it, (BottomlessRect, BaselineRect)):
            top = it.c if isinstance(it, BottomlessRect) else it.top
            bottom = y0 if isinstance(it, BottomlessRect) else it.bottom
            parts.append(f'<rect x="{tx(it.a):.2f}" y="{ty(top):.2f}" '
                         f'width="{tx(it.b) - tx(it.a):.2f}" height="{ty(bottom) - ty(top):.2f}" '
                         f'fill="{col}" fill-opacity="0.25" stroke="{col}"/>')
        elif isinstance(it, HalfPlane):
            box = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
            sign = 1.0 if it.region is Region.ABOVE else -1.0
            poly = _clip(box, -sign * float(it.slope), sign, -sign * float(it.intercept))
            if poly:
                pts = " ".join(f"{tx(x):.2f},{ty(y):.2f}" for x, y in poly)
                parts.append(f'<polygon points="{pts}" fill="{col}" fill-opacity="0.15" '
                             f'stroke="{col}"/>')
        else:
            parts.append(f'<circle cx="{tx(it.x):.2f}" cy="{ty(it.y):.2f}" r="4" '
                         f'fill="{col}" stroke="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
