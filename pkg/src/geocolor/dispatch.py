"""Which coloring algorithm serves a given (family, k)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import baseline, bottomless_dual, bottomless_primal, halfplane_dual, halfplane_primal
from .geom import Family


class UnsupportedRoute(ValueError):
    pass


@dataclass(frozen=True)
class Route:
    family: Family
    k_min: int
    k_max: int | None  # inclusive; None means unbounded
    algorithm: Callable
    palette: int
    label: str

    def serves(self, k: int) -> bool:
        return k >= self.k_min and (self.k_max is None or k <= self.k_max)


ROUTES: tuple[Route, ...] = (
    Route(Family.B_POINTS, 2, 3, bottomless_primal.color_points_b_k2, 3, "upward sweep, 3 colors"),
    Route(Family.B_POINTS, 4, None, bottomless_primal.color_points_b_k4, 2, "alternation sweep"),
    Route(Family.B_RECTS, 2, 2, bottomless_dual.color_rects_b_k2, 3, "divide and color"),
    Route(Family.B_RECTS, 3, None, bottomless_dual.color_rects_b_k3, 2, "case recursion"),
    Route(Family.H_POINTS, 2, 2, halfplane_primal.color_points_h_k2, 4, "hull + cut partners"),
    Route(Family.H_POINTS, 3, None, halfplane_primal.color_points_h_k3, 2, "hull ears"),
    Route(Family.H_RECTS, 2, 3, halfplane_dual.color_halfplanes_k2, 3, "caterpillar"),
    Route(Family.H_RECTS, 4, None, halfplane_dual.color_halfplanes_k4, 2, "dual hull ears"),
    Route(Family.BPRIME_POINTS, 2, 2, baseline.color_points_bprime_k2, 6, "split palettes"),
    Route(Family.BPRIME_POINTS, 3, 6, baseline.color_points_bprime_k3, 3, "shared 3 colors"),
    Route(Family.BPRIME_POINTS, 7, None, baseline.color_points_bprime_k7, 2, "shared alternation"),
    Route(Family.BPRIME_RECTS, 3, None, baseline.color_rects_bprime_k3, 4, "color pairs"),
)


def route(family: Family | str, k: int) -> Route:
    family = Family(family)
    if k < 2:
        raise UnsupportedRoute("k must be at least 2: singletons are always monochromatic")
    for r in ROUTES:
        if r.family is family and r.serves(k):
            return r
    raise UnsupportedRoute(f"no algorithm for {family.value} at k={k}")


def color(items, family: Family | str, k: int):
    return route(family, k).algorithm(items)
