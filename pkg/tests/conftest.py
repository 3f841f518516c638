import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from geocolor.geom import BaselineRect, BottomlessRect, HalfPlane, Point, Region, perturb

settings.register_profile(
    "repo", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("repo")

coord = st.integers(min_value=-6, max_value=6)


@st.composite
def b_points(draw, min_n=1, max_n=9):
    raw = draw(st.lists(st.tuples(coord, coord), min_size=min_n, max_size=max_n))
    return perturb([Point(x, y) for x, y in raw], "b-points")


@st.composite
def h_points(draw, min_n=1, max_n=8):
    raw = draw(st.lists(st.tuples(coord, coord), min_size=min_n, max_size=max_n))
    return perturb([Point(x, y) for x, y in raw], "h-points")


@st.composite
def bprime_points(draw, min_n=1, max_n=9):
    raw = draw(st.lists(st.tuples(coord, coord), min_size=min_n, max_size=max_n))
    return perturb([Point(x, y) for x, y in raw], "bprime-points")


@st.composite
def _interval(draw):
    a = draw(st.integers(-6, 5))
    b = draw(st.integers(a + 1, 6))
    return a, b


@st.composite
def b_rects(draw, min_n=1, max_n=8):
    raw = draw(st.lists(st.tuples(_interval(), coord), min_size=min_n, max_size=max_n))
    return perturb([BottomlessRect(a, b, c) for (a, b), c in raw], "b-rects")


@st.composite
def bprime_rects(draw, min_n=1, max_n=7):
    raw = draw(st.lists(st.tuples(_interval(), st.integers(-6, -1), st.integers(1, 6)),
                        min_size=min_n, max_size=max_n))
    return perturb([BaselineRect(a, b, lo, hi) for (a, b), lo, hi in raw], "bprime-rects")


@st.composite
def halfplanes(draw, min_n=1, max_n=7):
    raw = draw(st.lists(st.tuples(coord, coord, st.sampled_from(list(Region))),
                        min_size=min_n, max_size=max_n))
    return perturb([HalfPlane(a, b, r) for a, b, r in raw], "h-rects")


@pytest.fixture
def staircase():
    return [Point(i, i) for i in range(4)]
