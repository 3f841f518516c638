import pytest
from hypothesis import given

from conftest import b_points
from geocolor.bottomless_primal import color_points_b_k2, color_points_b_k4, insertion_neighbours
from geocolor.geom import GeneralPositionError, Point
from geocolor.instances import generate_items
from geocolor.lab import GADGETS
from geocolor.oracle import enumerate_primal_bottomless, verify_instance, verify_kproper

P = Point


def test_three_point_gadget_needs_three_colors():
    col = color_points_b_k2([P(0, 0), P(1, 2), P(2, 1)])
    assert sorted(col.colors) == [0, 1, 2]


def test_singletons():
    assert color_points_b_k2([P(3, 4)]).colors == (0,)
    assert color_points_b_k4([P(3, 4)]).colors == (0,)


def test_staircase_k2():
    pts = [P(i, i) for i in range(6)]
    assert color_points_b_k2(pts).colors == (0, 1, 0, 1, 0, 1)


def test_staircase_k4_trace():
    pts = [P(i, i) for i in range(8)]
    col = color_points_b_k4(pts)
    # p0 seeds red; each odd point joins its uncolored neighbour as a pair; p7 is filled
    assert col.colors == (0, 1, 0, 1, 0, 1, 0, 0)
    assert verify_kproper(enumerate_primal_bottomless(pts), col, 4).valid


def test_twelve_point_construction_is_4_proper():
    inst = next(g for g in GADGETS if g.filename == "bottomless_twelve_points.json").load()
    pts = list(inst.items)
    assert verify_instance(pts, "b-points", color_points_b_k4(pts), 4).valid
    assert verify_instance(pts, "b-points", color_points_b_k2(pts), 3).valid


def test_rejects_degenerate_input():
    with pytest.raises(GeneralPositionError):
        color_points_b_k2([P(0, 0), P(1, 0)])


def _x_adjacent_pairs(points, members):
    order = sorted(members, key=lambda i: points[i].x)
    return list(zip(order, order[1:]))


@given(b_points())
def test_k2_keeps_x_neighbours_apart_in_every_prefix(pts):
    col = color_points_b_k2(pts).colors
    up, _, _ = insertion_neighbours(pts)
    for t in range(1, len(up) + 1):
        for a, b in _x_adjacent_pairs(pts, up[:t]):
            assert col[a] != col[b]


@given(b_points())
def test_k4_invariant_replayed(pts):
    processed = []

    def watch(p, colors):
        processed.append(p)
        order = sorted(processed, key=lambda i: pts[i].x)
        for a, b in zip(order, order[1:]):
            assert colors[a] is not None or colors[b] is not None
        coloured = [colors[i] for i in order if colors[i] is not None]
        assert all(u != v for u, v in zip(coloured, coloured[1:]))

    color_points_b_k4(pts, observer=watch)
    assert len(processed) == len(pts)


@given(b_points())
def test_oracle_validity_small(pts):
    h = enumerate_primal_bottomless(pts)
    c2, c4 = color_points_b_k2(pts), color_points_b_k4(pts)
    assert c2.palette_size == 3 and c4.palette_size == 2
    assert verify_kproper(h, c2, 2).valid and verify_kproper(h, c4, 4).valid
    assert color_points_b_k2(pts) == c2  # deterministic


@pytest.mark.slow
def test_oracle_validity_seeded():
    for seed in range(100):
        pts = generate_items("b-points", 2 + (seed * 37) % 199, seed)
        assert verify_instance(pts, "b-points", color_points_b_k2(pts), 2).valid, seed
        assert verify_instance(pts, "b-points", color_points_b_k4(pts), 4).valid, seed
