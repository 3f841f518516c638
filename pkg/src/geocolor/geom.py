"""Exact planar primitives: rational coordinates, regions, predicates and hulls.

Every coordinate is an exact rational (``int`` or :class:`fractions.Fraction`);
integral fractions are normalised to ``int`` so that integer inputs stay on
the fast path. No predicate ever touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

import numpy as np

Rational = Union[int, Fraction]


def as_rational(value) -> Rational:
    """Coerce ``value`` to an exact rational.

    Accepts ints, Fractions, strings such as ``"3/4"`` or ``"-2"``, and floats
    (converted exactly). Integral results are returned as ``int``.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        q = value
    elif isinstance(value, str):
        q = Fraction(value.strip())
    elif isinstance(value, (float, _RationalABC)):
        q = Fraction(value)
    else:
        raise TypeError(f"cannot interpret {value!r} as a rational")
    return q.numerator if q.denominator == 1 else q


class Family(str, Enum):
    """The six primal/dual settings handled by the package."""

    B_POINTS = "b-points"
    B_RECTS = "b-rects"
    H_POINTS = "h-points"
    H_RECTS = "h-rects"
    BPRIME_POINTS = "bprime-points"
    BPRIME_RECTS = "bprime-rects"

    @property
    def is_primal(self) -> bool:
        return self in (Family.B_POINTS, Family.H_POINTS, Family.BPRIME_POINTS)


class Region(str, Enum):
    ABOVE = "above"
    BELOW = "below"


class Heading(str, Enum):
    NORTH = "north"
    SOUTH = "south"


class Turn(Enum):
    LEFT = 1
    RIGHT = -1
    COLLINEAR = 0


@dataclass(frozen=True, slots=True)
class Point:
    x: Rational
    y: Rational

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))


@dataclass(frozen=True, slots=True)
class BottomlessRect:
    """Open region ``a < x < b, y < c``."""

    a: Rational
    b: Rational
    c: Rational

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if not self.a < self.b:
            raise ValueError(f"bottomless rectangle needs a < b, got {self.a}, {self.b}")

    def contains(self, p: Point) -> bool:
        return self.a < p.x < self.b and p.y < self.c


@dataclass(frozen=True, slots=True)
class BaselineRect:
    """Open axis-parallel rectangle crossing the base-line ``y = 0``."""

    a: Rational
    b: Rational
    bottom: Rational
    top: Rational

    def __post_init__(self):
        for name in ("a", "b", "bottom", "top"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if not self.a < self.b:
            raise ValueError(f"rectangle needs a < b, got {self.a}, {self.b}")
        if not self.bottom < 0 < self.top:
            raise ValueError(
                f"rectangle must cross the base-line: bottom={self.bottom}, top={self.top}"
            )

    def contains(self, p: Point) -> bool:
        return self.a < p.x < self.b and self.bottom < p.y < self.top

    def upper(self) -> BottomlessRect:
        return BottomlessRect(self.a, self.b, self.top)

    def lower_mirrored(self) -> BottomlessRect:
        return BottomlessRect(self.a, self.b, -self.bottom)


@dataclass(frozen=True, slots=True)
class HalfPlane:
    """Open half-plane bounded by ``y = slope*x + intercept``."""

    slope: Rational
    intercept: Rational
    region: Region = Region.ABOVE

    def __post_init__(self):
        object.__setattr__(self, "slope", as_rational(self.slope))
        object.__setattr__(self, "intercept", as_rational(self.intercept))
        object.__setattr__(self, "region", Region(self.region))

    def contains(self, p: Point) -> bool:
        line = self.slope * p.x + self.intercept
        return p.y > line if self.region is Region.ABOVE else p.y < line


@dataclass(frozen=True, slots=True)
class DirectedPoint:
    x: Rational
    y: Rational
    heading: Heading = Heading.NORTH

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))
        object.__setattr__(self, "heading", Heading(self.heading))

    @property
    def point(self) -> Point:
        return Point(self.x, self.y)

    def sees(self, slope: Rational, intercept: Rational) -> bool:
        """True when the vertical ray in this point's heading meets the line."""
        line = slope * self.x + intercept
        return self.y < line if self.heading is Heading.NORTH else self.y > line


# -- predicates ---------------------------------------------------------------

def cross(p: Point, q: Point, r: Point) -> Rational:
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orient(p: Point, q: Point, r: Point) -> Turn:
    d = cross(p, q, r)
    if d > 0:
        return Turn.LEFT
    if d < 0:
        return Turn.RIGHT
    return Turn.COLLINEAR


def in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    """Strict interior test for a non-degenerate triangle."""
    d1, d2, d3 = cross(a, b, p), cross(b, c, p), cross(c, a, p)
    return (d1 > 0 and d2 > 0 and d3 > 0) or (d1 < 0 and d2 < 0 and d3 < 0)


# -- hulls --------------------------------------------------------------------

def _chain(points: Sequence[Point]) -> list[Point]:
    # Andrew's monotone chain: keeps strictly left turns.
    out: list[Point] = []
    for p in points:
        while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
            out.pop()
        out.append(p)
    return out


def _distinct_sorted(points: Iterable[Point]) -> list[Point]:
    return sorted(set(points), key=lambda p: (p.x, p.y))


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Hull vertices in clockwise order, starting at the lowest-x vertex.

    Collinear boundary points are not vertices. Ties in x start at the lower
    point.
    """
    pts = _distinct_sorted(points)
    if len(pts) <= 2:
        return pts
    lower = _chain(pts)
    upper = _chain(pts[::-1])
    ccw = lower[:-1] + upper[:-1]
    return [ccw[0]] + ccw[:0:-1]


def lower_hull(points: Iterable[Point]) -> list[Point]:
    """Lower chain of the hull, x-increasing; only the lowest point per x."""
    lowest: dict = {}
    for p in points:
        if p.x not in lowest or p.y < lowest[p.x].y:
            lowest[p.x] = p
    return _chain(sorted(lowest.values(), key=lambda p: p.x))


def upper_hull(points: Iterable[Point]) -> list[Point]:
    """Upper chain of the hull, x-increasing; only the highest point per x."""
    highest: dict = {}
    for p in points:
        if p.x not in highest or p.y > highest[p.x].y:
            highest[p.x] = p
    chain = _chain(sorted(highest.values(), key=lambda p: p.x, reverse=True))
    return chain[::-1]


def hull_indices(points: Sequence[Point]) -> list[int]:
    """Indices of :func:`convex_hull` vertices (points assumed pairwise distinct)."""
    where = {p: i for i, p in enumerate(points)}
    return [where[p] for p in convex_hull(points)]


# -- general position ---------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    indices: tuple[int, ...]
    reason: str

    def __str__(self) -> str:
        return f"{self.reason} at indices {','.join(map(str, self.indices))}"


class GeneralPositionError(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


def _first_tie(values: Sequence) -> tuple[int, int] | None:
    seen: dict = {}
    for i, v in enumerate(values):
        if v in seen:
            return seen[v], i
        seen[v] = i
    return None


def _direction_key(dx: Rational, dy: Rational):
    return None if dx == 0 else Fraction(dy) / dx


def _row_triples(coords, i: int):
    xi, yi = coords[i]
    buckets: dict = {}
    for j in range(i + 1, len(coords)):
        xj, yj = coords[j]
        if xi == xj and yi == yj:
            continue
        key = _direction_key(xj - xi, yj - yi)
        if key in buckets:
            for j0 in buckets[key]:
                yield (i, j0, j)
            buckets[key].append(j)
        else:
            buckets[key] = [j]


def _row_screen(coords):
    """Per row ``i``, a cheap test "might row i hold a collinear triple?".

    Coordinates are scaled to integers (collinearity is scale-invariant) and
    directions reduced by their gcd; a row without a repeated direction is
    certainly clean. Falls back to "always maybe" when int64 could overflow.
    """
    den = lcm(*(Fraction(v).denominator for xy in coords for v in xy))
    scaled = [(int(x * den), int(y * den)) for x, y in coords]
    if max((abs(v) for xy in scaled for v in xy), default=0) >= 2 ** 60:
        return lambda i: True
    arr = np.array(scaled, dtype=np.int64).reshape(-1, 2)

    def maybe(i):
        d = arr[i + 1:] - arr[i]
        d = d[(d != 0).any(axis=1)]
        if len(d) < 2:
            return False
        g = np.gcd(d[:, 0], d[:, 1])
        d = d // g[:, None]
        flip = (d[:, 0] < 0) | ((d[:, 0] == 0) & (d[:, 1] < 0))
        d[flip] *= -1
        return len(np.unique(d, axis=0)) < len(d)
    return maybe


def collinear_triples(coords: Sequence[tuple[Rational, Rational]], first_only: bool = False):
    """Yield index triples ``(i, j, k)``, ``i < j < k``, of collinear coordinates.

    Each maximal collinear group is reported through its pairs with the
    smallest index; duplicates are not considered here.
    """
    maybe = _row_screen(coords)
    for i in range(len(coords)):
        if not maybe(i):
            continue
        for triple in _row_triples(coords, i):
            yield triple
            if first_only:
                return


def _coords(items, family: Family) -> list[tuple[Rational, Rational]]:
    if family is Family.H_RECTS:
        return [(h.slope, h.intercept) for h in items]
    return [(p.x, p.y) for p in items]


def validate_general_position(items: Sequence, family: Family | str) -> Violation | None:
    """Return the first general-position violation, or ``None`` when valid."""
    family = Family(family)
    if family in (Family.B_POINTS, Family.BPRIME_POINTS):
        tie = _first_tie([p.x for p in items])
        if tie:
            return Violation(tie, "equal x")
        tie = _first_tie([p.y for p in items])
        if tie:
            return Violation(tie, "equal y")
        if family is Family.BPRIME_POINTS:
            for i, p in enumerate(items):
                if p.y == 0:
                    return Violation((i,), "point on base-line")
        return None
    if family in (Family.B_RECTS, Family.BPRIME_RECTS):
        edges = []
        for i, r in enumerate(items):
            edges.append((r.a, i))
            edges.append((r.b, i))
        tie = _first_tie([e for e, _ in edges])
        if tie:
            return Violation((edges[tie[0]][1], edges[tie[1]][1]), "shared vertical edge")
        tops = [r.top if family is Family.BPRIME_RECTS else r.c for r in items]
        tie = _first_tie(tops)
        if tie:
            return Violation(tie, "equal top")
        if family is Family.BPRIME_RECTS:
            tie = _first_tie([r.bottom for r in items])
            if tie:
                return Violation(tie, "equal bottom")
        return None
    coords = _coords(items, family)
    tie = _first_tie(coords)
    if tie:
        reason = "equal points" if family is Family.H_POINTS else "identical boundary"
        return Violation(tie, reason)
    for triple in collinear_triples(coords, first_only=True):
        reason = "collinear" if family is Family.H_POINTS else "collinear duals"
        return Violation(triple, reason)
    return None


def require_general_position(items: Sequence, family: Family | str) -> None:
    violation = validate_general_position(items, family)
    if violation is not None:
        raise GeneralPositionError(violation)


# -- perturbation -------------------------------------------------------------

def _min_gap(values: Iterable[Rational]) -> Rational:
    distinct = sorted(set(values))
    gaps = [b - a for a, b in zip(distinct, distinct[1:])]
    return min(gaps) if gaps else 1


def _spread_ties(values: Sequence[Rational], eps: Rational, signs: Sequence[int],
                 move_zero: bool = False) -> list[Rational]:
    # j-th repeat of a value (input order) moves by j*eps in its own direction
    seen: dict = {}
    out = []
    for v, s in zip(values, signs):
        j = seen.get(v, 0)
        seen[v] = j + 1
        if move_zero and v == 0:
            j += 1
        out.append(as_rational(v + s * j * eps) if j else v)
    return out


def perturb(items: Sequence, family: Family | str) -> list:
    """Deterministically move ``items`` into general position.

    Valid inputs are returned unchanged. Ties are broken by shifting the
    j-th repeat of a coordinate by ``j * eps`` with ``eps`` a quarter of the
    smallest coordinate gap divided by ``n + 1``, so the order of distinct
    coordinates is preserved. Rectangles only ever shrink, which keeps every
    original covering set realisable. Points on the base-line move up.
    """
    family = Family(family)
    items = list(items)
    if validate_general_position(items, family) is None:
        return items
    n = len(items)
    if family in (Family.B_POINTS, Family.BPRIME_POINTS):
        xs = [p.x for p in items]
        ys = [p.y for p in items]
        bprime = family is Family.BPRIME_POINTS
        ex = Fraction(_min_gap(xs)) / (4 * (n + 1))
        ey = Fraction(_min_gap(ys + ([0] if bprime else []))) / (4 * (n + 1))
        xs = _spread_ties(xs, ex, [1] * n)
        ys = _spread_ties(ys, ey, [1] * n, move_zero=bprime)
        return [Point(x, y) for x, y in zip(xs, ys)]
    if family in (Family.B_RECTS, Family.BPRIME_RECTS):
        edges = [v for r in items for v in (r.a, r.b)]
        ex = Fraction(_min_gap(edges)) / (4 * (n + 1))
        edges = _spread_ties(edges, ex, [1, -1] * n)
        if family is Family.B_RECTS:
            ey = Fraction(_min_gap([r.c for r in items])) / (4 * (n + 1))
            tops = _spread_ties([r.c for r in items], ey, [-1] * n)
            return [BottomlessRect(edges[2 * i], edges[2 * i + 1], tops[i]) for i in range(n)]
        ys = [r.top for r in items] + [r.bottom for r in items] + [0]
        ey = Fraction(_min_gap(ys)) / (4 * (n + 1))
        tops = _spread_ties([r.top for r in items], ey, [-1] * n)
        bottoms = _spread_ties([r.bottom for r in items], ey, [1] * n)
        return [BaselineRect(edges[2 * i], edges[2 * i + 1], bottoms[i], tops[i])
                for i in range(n)]
    coords = _coords(items, family)
    moved = _perturb_coords(coords, family)
    if family is Family.H_POINTS:
        return [Point(x, y) for x, y in moved]
    return [HalfPlane(x, y, h.region) for (x, y), h in zip(moved, items)]


def _perturb_coords(coords, family):
    n = len(coords)
    offending = set()
    seen: dict = {}
    for i, c in enumerate(coords):
        if c in seen:
            offending.update((seen[c], i))
        seen.setdefault(c, i)
    for triple in collinear_triples(coords):
        offending.update(triple)
    rank = {i: j + 1 for j, i in enumerate(sorted(offending))}
    gap = _min_gap([c for xy in coords for c in xy])
    eps = Fraction(gap) / (4 * (n + 1) ** 2)
    # moment-curve offsets; halve eps until no orientation flips or vanishes
    signs = {}
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if i in rank or j in rank or k in rank:
                    signs[(i, j, k)] = _sign(_det(coords[i], coords[j], coords[k]))
    while True:
        cand = [
            (as_rational(x + rank[i] * eps), as_rational(y + rank[i] ** 2 * eps)) if i in rank
            else (x, y)
            for i, (x, y) in enumerate(coords)
        ]
        ok = len(set(cand)) == n
        if ok:
            for (i, j, k), s in signs.items():
                t = _sign(_det(cand[i], cand[j], cand[k]))
                if t == 0 or (s != 0 and t != s):
                    ok = False
                    break
        if ok:
            return cand
        eps /= 2


def _det(p, q, r):
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _sign(v) -> int:
    return (v > 0) - (v < 0)
