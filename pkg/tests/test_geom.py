import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from geocolor.geom import (
    BaselineRect,
    BottomlessRect,
    DirectedPoint,
    GeneralPositionError,
    HalfPlane,
    Point,
    Turn,
    as_rational,
    convex_hull,
    cross,
    lower_hull,
    orient,
    perturb,
    require_general_position,
    upper_hull,
    validate_general_position,
)
from geocolor.oracle import enumerate_dual_bottomless

P = Point


def test_as_rational_normalises():
    assert as_rational("6/3") == 2 and isinstance(as_rational("6/3"), int)
    assert as_rational("3/4") == Fraction(3, 4)
    assert as_rational(0.5) == Fraction(1, 2)
    with pytest.raises(TypeError):
        as_rational(True)


def test_region_invariants():
    with pytest.raises(ValueError):
        BottomlessRect(2, 2, 0)
    with pytest.raises(ValueError):
        BaselineRect(0, 1, 1, 2)
    assert BottomlessRect(0, 2, 1).contains(P(1, 0))
    assert not BottomlessRect(0, 2, 1).contains(P(1, 1))  # open top edge
    assert BaselineRect(0, 2, -1, 1).lower_mirrored() == BottomlessRect(0, 2, 1)


@pytest.mark.parametrize("pts,expected", [
    ((P(0, 0), P(1, 0), P(0, 1)), Turn.LEFT),
    ((P(0, 0), P(1, 1), P(2, 2)), Turn.COLLINEAR),
    ((P(0, 0), P(0, 1), P(1, 0)), Turn.RIGHT),
])
def test_orient_examples(pts, expected):
    assert orient(*pts) is expected


big = st.integers(min_value=-10**9, max_value=10**9)


@given(st.lists(st.tuples(big, big), min_size=3, max_size=3))
def test_orient_exact_and_symmetric(raw):
    p, q, r = (P(x, y) for x, y in raw)
    # reference determinant expanded differently
    det = p.x * q.y - p.y * q.x + q.x * r.y - q.y * r.x + r.x * p.y - r.y * p.x
    sign = (det > 0) - (det < 0)
    assert orient(p, q, r).value == sign
    assert orient(q, r, p) is orient(p, q, r)
    assert orient(q, p, r).value == -sign


def test_convex_hull_examples():
    assert convex_hull([P(0, 0), P(2, 0), P(1, 3), P(1, 1)]) == [P(0, 0), P(1, 3), P(2, 0)]
    assert convex_hull([P(0, 0)]) == [P(0, 0)]


def _inside_or_on(p, hull):
    m = len(hull)
    return m < 3 or all(cross(hull[i], hull[(i + 1) % m], p) <= 0 for i in range(m))


def test_hull_of_twenty_random_points():
    rng = random.Random(20)
    pts = [P(rng.randint(0, 100), rng.randint(0, 100)) for _ in range(20)]
    hull = convex_hull(pts)
    m = len(hull)
    for p in pts:
        if p in hull:
            continue
        # clockwise order: non-hull points lie strictly right of every directed edge
        assert all(cross(hull[i], hull[(i + 1) % m], p) < 0 for i in range(m))


def _rotations(seq):
    return {tuple(seq[i:] + seq[:i]) for i in range(len(seq))}


@given(st.lists(st.tuples(st.integers(-20, 20), st.integers(-20, 20)), min_size=1, max_size=25),
       st.randoms())
def test_hull_contains_everything_and_ignores_order(raw, rnd):
    pts = [P(x, y) for x, y in raw]
    hull = convex_hull(pts)
    assert all(_inside_or_on(p, hull) for p in pts)
    shuffled = pts[:]
    rnd.shuffle(shuffled)
    assert tuple(convex_hull(shuffled)) in _rotations(hull)
    if len(hull) >= 3:
        assert all(cross(hull[i - 1], hull[i], hull[(i + 1) % len(hull)]) < 0
                   for i in range(len(hull)))


def test_lower_and_upper_hull_examples():
    assert lower_hull([P(0, 0), P(1, -1), P(2, 0)]) == [P(0, 0), P(1, -1), P(2, 0)]
    assert lower_hull([P(0, 0), P(1, 1), P(2, 0)]) == [P(0, 0), P(2, 0)]
    assert upper_hull([P(0, 0), P(1, 1), P(2, 0)]) == [P(0, 0), P(1, 1), P(2, 0)]


@given(st.lists(st.tuples(st.integers(-20, 20), st.integers(-20, 20)), min_size=3, max_size=25,
                unique_by=lambda t: t[0]))
def test_chains_cover_hull(raw):
    pts = [P(x, y) for x, y in raw]
    assert set(lower_hull(pts)) | set(upper_hull(pts)) == set(convex_hull(pts))


def test_validation_reasons():
    v = validate_general_position([P(0, 0), P(1, 0)], "b-points")
    assert str(v) == "equal y at indices 0,1"
    v = validate_general_position([P(0, 0), P(1, 1), P(2, 2), P(5, 0)], "h-points")
    assert str(v) == "collinear at indices 0,1,2"
    assert validate_general_position([P(0, 0), P(1, 2), P(2, 1)], "b-points") is None
    assert validate_general_position([P(0, 1), P(1, 0)], "bprime-points").reason == \
        "point on base-line"
    with pytest.raises(GeneralPositionError):
        require_general_position([BottomlessRect(0, 2, 1), BottomlessRect(2, 3, 0)], "b-rects")
    # three boundaries through one point
    hs = [HalfPlane(1, 0, "above"), HalfPlane(-1, 0, "below"), HalfPlane(2, 0, "above")]
    assert validate_general_position(hs, "h-rects").reason == "collinear duals"


def test_perturb_noop_on_valid_input():
    pts = [P(0, 0), P(1, 2), P(2, 1)]
    assert perturb(pts, "b-points") == pts


def test_perturb_flat_row():
    out = perturb([P(0, 0), P(1, 0), P(2, 0)], "b-points")
    assert validate_general_position(out, "b-points") is None
    assert [p.x for p in out] == [0, 1, 2]
    assert len({p.y for p in out}) == 3


def test_perturb_shared_left_edge_keeps_deep_cover():
    rects = [BottomlessRect(0, 4, 3), BottomlessRect(0, 2, 2), BottomlessRect(1, 5, 1)]
    moved = perturb(rects, "b-rects")
    assert validate_general_position(moved, "b-rects") is None
    xs = sorted({v for r in rects for v in (r.a, r.b)})
    ys = sorted({r.c for r in rects})
    samples = [P(Fraction(a + b, 2), y) for a, b in zip(xs, xs[1:])
               for y in [ys[0] - 1] + [Fraction(c + d, 2) for c, d in zip(ys, ys[1:])]]
    for s in samples:
        before = [i for i, r in enumerate(rects) if r.contains(s)]
        if len(before) >= 2:
            assert before == [i for i, r in enumerate(moved) if r.contains(s)]
    assert enumerate_dual_bottomless(moved).edges >= {(0, 1), (0, 1, 2)}


FAMILIES = ["b-points", "h-points", "bprime-points", "b-rects", "bprime-rects", "h-rects"]


@given(st.data())
def test_perturb_is_idempotent_and_valid(data):
    from conftest import b_points, b_rects, bprime_points, bprime_rects, h_points, halfplanes
    strat = dict(zip(FAMILIES, [b_points(), h_points(), bprime_points(), b_rects(),
                                bprime_rects(), halfplanes()]))
    fam = data.draw(st.sampled_from(FAMILIES))
    items = data.draw(strat[fam])
    assert validate_general_position(items, fam) is None
    assert perturb(items, fam) == items


@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=2, max_size=8))
def test_perturb_keeps_strict_order(raw):
    pts = [P(x, y) for x, y in raw]
    for fam in ("b-points", "h-points"):
        moved = perturb(pts, fam)
        assert validate_general_position(moved, fam) is None
        for i in range(len(pts)):
            for j in range(len(pts)):
                if pts[i].x < pts[j].x:
                    assert moved[i].x < moved[j].x
                if pts[i].y < pts[j].y:
                    assert moved[i].y < moved[j].y


def test_directed_point_sees():
    d = DirectedPoint(0, 0, "north")
    assert d.sees(-1, 1) and not DirectedPoint(0, 0, "south").sees(-1, 1)


@given(st.lists(st.tuples(st.fractions(min_value=-4, max_value=4, max_denominator=3),
                          st.integers(-4, 4)), max_size=12))
def test_collinearity_screen_matches_plain_scan(coords):
    from geocolor.geom import _row_triples, collinear_triples
    plain = [t for i in range(len(coords)) for t in _row_triples(coords, i)]
    assert list(collinear_triples(coords)) == plain
