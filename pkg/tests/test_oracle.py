import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import b_points, b_rects, bprime_points, bprime_rects, h_points, halfplanes
from geocolor.geom import BaselineRect, BottomlessRect, HalfPlane, Point, Region
from geocolor.halfplane_dual import dual_line, dual_sees, dualize
from geocolor.instances import generate_items
from geocolor.oracle import (
    Coloring,
    Hypergraph,
    check_monotonicity,
    enumerate_dual_baseline,
    enumerate_dual_bottomless,
    enumerate_dual_halfplane,
    enumerate_hyperedges,
    enumerate_primal_baseline,
    enumerate_primal_bottomless,
    enumerate_primal_halfplane,
    hull_consecutive,
    sample_dual_halfplane,
    sample_hyperedges,
    verify_cf,
    verify_instance,
    verify_kproper,
)

P = Point
FAMILIES = ["b-points", "h-points", "bprime-points", "b-rects", "bprime-rects", "h-rects"]
STRATEGIES = dict(zip(FAMILIES, [b_points, h_points, bprime_points, b_rects, bprime_rects,
                                 halfplanes]))


def all_subsets(n):
    return {c for r in range(1, n + 1) for c in itertools.combinations(range(n), r)}


# -- examples --------------------------------------------------------------------

def test_bottomless_small():
    pts = [P(0, 0), P(1, 2), P(2, 1)]
    h = enumerate_primal_bottomless(pts)
    assert h.edges == all_subsets(3)  # every pair can be cut out
    assert h.edges == sample_hyperedges(pts, "b-points").edges
    assert enumerate_primal_bottomless([P(5, 5)]).edges == {(0,)}


def test_bottomless_staircase(staircase):
    h = enumerate_primal_bottomless(staircase)
    for i, j in itertools.combinations_with_replacement(range(4), 2):
        assert tuple(range(i, j + 1)) in h
    assert h.edges == sample_hyperedges(staircase, "b-points").edges


def test_witnesses_realise_their_edges():
    pts = generate_items("b-points", 8, 3)
    h = enumerate_primal_bottomless(pts)
    for e, rect in h.witnesses.items():
        assert tuple(i for i, p in enumerate(pts) if rect.contains(p)) == e


def test_halfplane_triangle_and_p_star():
    assert enumerate_primal_halfplane([P(0, 0), P(4, 0), P(2, 3)]).edges == all_subsets(3)
    h = enumerate_primal_halfplane([P(0, 0), P(4, 0), P(2, 4), P(2, 1)])
    assert {(0, 3), (1, 3), (2, 3), (0, 2), (0, 1, 2, 3)} <= h.edges
    # the inner point can be neither isolated nor left out of the outer triangle
    assert (3,) not in h and (0, 1, 2) not in h


def test_dual_bottomless_examples():
    nested = [BottomlessRect(0, 10, 3), BottomlessRect(1, 9, 2), BottomlessRect(2, 8, 1)]
    assert enumerate_dual_bottomless(nested).edges == {(0,), (0, 1), (0, 1, 2)}
    apart = [BottomlessRect(0, 1, 1), BottomlessRect(2, 3, 2)]  # tops kept distinct
    assert enumerate_dual_bottomless(apart).edges == {(0,), (1,)}
    h = enumerate_dual_bottomless(nested)
    for e, p in h.witnesses.items():
        assert tuple(i for i, r in enumerate(nested) if r.contains(p)) == e


def test_dual_halfplane_two_crossing():
    hs = [HalfPlane(1, 0, Region.ABOVE), HalfPlane(-1, 1, Region.ABOVE)]
    assert enumerate_dual_halfplane(hs).edges == {(0,), (1,), (0, 1)}


def test_dual_halfplane_pairs_gadget():
    hs = [HalfPlane(0, 0, Region.BELOW), HalfPlane(3, 0, Region.ABOVE),
          HalfPlane(-1, 4, Region.ABOVE)]
    h = enumerate_dual_halfplane(hs)
    assert {(0, 1), (0, 2), (1, 2)} <= h.edges


@given(halfplanes(min_n=2))
def test_dual_halfplane_matches_dualization(hs):
    duals = dualize(hs)
    h = sample_dual_halfplane(hs)
    for e, p in h.witnesses.items():
        seen = tuple(i for i, d in enumerate(duals) if dual_sees(d, dual_line(p)))
        assert seen == e


def test_baseline_examples():
    assert enumerate_primal_baseline([P(1, 1)]).edges == {(0,)}
    assert enumerate_dual_baseline([BaselineRect(0, 2, -1, 1)]).edges == {(0,)}
    gadget = [BaselineRect(0, 3, -3, 3), BaselineRect(2, 5, -2, 2), BaselineRect(1, 6, -1, 1),
              BaselineRect(-1, 7, -10, "1/4")]
    h = enumerate_dual_baseline(gadget)
    assert set(itertools.combinations(range(4), 2)) <= h.edges


@given(b_points(min_n=1, max_n=8).filter(lambda ps: all(p.y > 0 for p in ps)))
def test_baseline_above_line_reduces_to_bottomless(pts):
    assert enumerate_primal_baseline(pts).edges == enumerate_primal_bottomless(pts).edges


# -- two independent strategies agree ---------------------------------------------

@pytest.mark.parametrize("family", FAMILIES)
@given(data=st.data())
def test_strategies_agree_generated(family, data):
    items = data.draw(STRATEGIES[family]())
    assert enumerate_hyperedges(items, family).edges == sample_hyperedges(items, family).edges


@pytest.mark.slow
@pytest.mark.parametrize("family", FAMILIES)
def test_strategies_agree_seeded(family):
    for seed in range(100):
        n = 1 + seed % 10
        items = generate_items(family, n, seed)
        assert enumerate_hyperedges(items, family).edges == \
            sample_hyperedges(items, family).edges, (family, seed)


@pytest.mark.parametrize("family", ["b-points", "h-points", "bprime-points"])
@given(data=st.data())
def test_sized_enumeration_is_a_slice(family, data):
    items = data.draw(STRATEGIES[family]())
    full = enumerate_hyperedges(items, family)
    enum = {"b-points": enumerate_primal_bottomless, "h-points": enumerate_primal_halfplane,
            "bprime-points": enumerate_primal_baseline}[family]
    for k in range(1, len(items) + 1):
        assert enum(items, size=k).edges == {e for e in full.edges if len(e) == k}


# -- structure ---------------------------------------------------------------------

@given(b_points())
def test_bottomless_monotone(pts):
    assert check_monotonicity(pts, "b-points")


@given(h_points())
def test_halfplane_monotone(pts):
    assert check_monotonicity(pts, "h-points")


@pytest.mark.slow
def test_monotone_on_200_seeds():
    for seed in range(200):
        for fam in ("b-points", "h-points"):
            assert check_monotonicity(generate_items(fam, 3 + seed % 9, seed), fam)


def test_monotonicity_detects_a_gap():
    h = Hypergraph(3, {(0, 1, 2)})
    assert not check_monotonicity(h)


@given(h_points())
def test_hull_consecutive(pts):
    assert hull_consecutive(pts, enumerate_primal_halfplane(pts))


# -- verification ------------------------------------------------------------------

def test_verify_kproper_examples():
    h = Hypergraph(2, {(0, 1)})
    assert verify_kproper(h, Coloring(2, [0, 1]), 2).valid
    bad = verify_kproper(h, [0, 0], 2)
    assert not bad.valid and bad.witness == (0, 1)
    assert verify_kproper(h, [0, 0], 3).valid
    with pytest.raises(ValueError):
        verify_kproper(h, [0], 2)


def test_verify_cf_examples():
    assert verify_cf(Hypergraph(3, {(0, 1, 2)}), [0, 0, 1], 1).valid
    v = verify_cf(Hypergraph(2, {(0, 1)}), [0, 0], 1)
    assert not v.valid and v.witness == (0, 1)
    with pytest.raises(ValueError):
        verify_cf(Hypergraph(2, {(0, 1)}), [0, 0, 0], 1)


def test_verify_instance_reports_region():
    pts = [P(0, 0), P(1, 2), P(2, 1)]
    v = verify_instance(pts, "b-points", [0, 0, 1], 2)
    assert not v.valid and v.witness in {(0,), (0, 1), (0, 2), (0, 1, 2)} - {(0,)}
    rect = v.region
    assert tuple(i for i, p in enumerate(pts) if rect.contains(p)) == v.witness
    assert verify_instance(pts, "b-points", [0, 0, 0], 4).valid


def _random_coloring(data, n, c):
    return data.draw(st.lists(st.integers(0, c - 1), min_size=n, max_size=n))


@given(data=st.data())
def test_downward_closed_in_k(data):
    pts = data.draw(b_points(min_n=2))
    h = enumerate_primal_bottomless(pts)
    col = _random_coloring(data, len(pts), 2)
    passing = [k for k in range(1, len(pts) + 2) if verify_kproper(h, col, k).valid]
    if passing:
        assert passing == list(range(passing[0], len(pts) + 2))


@given(data=st.data())
def test_cf_implies_next_proper(data):
    family = data.draw(st.sampled_from(FAMILIES))
    items = data.draw(STRATEGIES[family]())
    h = enumerate_hyperedges(items, family)
    col = _random_coloring(data, len(items), 3)
    k = data.draw(st.integers(1, 3))
    if verify_cf(h, col, k).valid:
        assert verify_kproper(h, col, k + 1).valid


@given(data=st.data())
def test_sized_verification_matches_full(data):
    family = data.draw(st.sampled_from(["b-points", "h-points", "bprime-points"]))
    items = data.draw(STRATEGIES[family]())
    col = _random_coloring(data, len(items), 2)
    k = data.draw(st.integers(2, 5))
    full = verify_kproper(enumerate_hyperedges(items, family), col, k)
    assert verify_instance(items, family, col, k).valid == full.valid
