"""Exhaustive chromatic search, certified lower-bound gadgets, and the
conflict-free coloring built from repeated proper colorings."""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Sequence

from .dispatch import route
from .geom import Family
from .instances import Instance, loads_instance
from .oracle import Coloring, Hypergraph, enumerate_hyperedges, verify_kproper

SEARCH_BUDGET = 10**9


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ChromaticResult:
    colors: int | None  # None: nothing up to max_colors works
    witness: Coloring | None = None
    nodes: int = 0


def _budget(n: int, c: int) -> float:
    # canonical colorings number at most c^n / c!
    return c ** n / math.factorial(c)


def find_kproper(h: Hypergraph, k: int, c: int) -> tuple[Coloring | None, int]:
    """Backtracking over canonical colorings (new colors appear in order).

    An edge is checked as soon as its largest vertex is colored.
    """
    n = h.vertex_count
    if n == 0:
        return Coloring(max(c, 1), []), 0
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in h.edges:
        if len(e) >= k:
            closing[e[-1]].append(e)
    colors = [-1] * n
    nodes = 0

    def ok(v):
        cv = colors[v]
        return all(any(colors[u] != cv for u in e) for e in closing[v])

    def extend(v, used):
        nonlocal nodes
        if v == n:
            return True
        for col in range(min(used + 1, c)):
            nodes += 1
            colors[v] = col
            if ok(v) and extend(v + 1, max(used, col + 1)):
                return True
        colors[v] = -1
        return False

    found = extend(0, 0)
    return (Coloring(c, colors) if found else None), nodes


def exact_chromatic(h: Hypergraph, k: int, max_colors: int) -> ChromaticResult:
    """Smallest c <= max_colors with a k-proper c-coloring of ``h``."""
    total = 0
    for c in range(1, max_colors + 1):
        if _budget(h.vertex_count, c) > SEARCH_BUDGET:
            raise SearchBudgetExceeded(
                f"{c} colors on {h.vertex_count} vertices exceeds the search budget")
        witness, nodes = find_kproper(h, k, c)
        total += nodes
        if witness is not None:
            return ChromaticResult(c, witness, total)
    return ChromaticResult(None, None, total)


def exact_chromatic_reference(h: Hypergraph, k: int, max_colors: int) -> int | None:
    """Plain enumeration of every coloring; only for tiny hypergraphs."""
    for c in range(1, max_colors + 1):
        for colors in itertools.product(range(c), repeat=h.vertex_count):
            if verify_kproper(h, list(colors), k).valid:
                return c
    return None


# -- lower-bound gadgets ---------------------------------------------------------

@dataclass(frozen=True)
class Gadget:
    name: str
    filename: str
    k: int
    expected: int  # exact chromatic number at this k
    private_pairs: bool = False  # every pair is a hyperedge on its own

    def load(self) -> Instance:
        text = resources.files("geocolor").joinpath("data", "constructions",
                                                     self.filename).read_text()
        return loads_instance(text)


GADGETS: tuple[Gadget, ...] = (
    Gadget("three bottomless points", "bottomless_three_points.json", 2, 3, True),
    Gadget("twelve bottomless points", "bottomless_twelve_points.json", 3, 3),
    Gadget("three bottomless rectangles", "bottomless_three_rects.json", 2, 3, True),
    Gadget("four points, one inside", "halfplane_p_star.json", 2, 4, True),
    Gadget("four points in convex position", "halfplane_convex_four.json", 2, 2),
    Gadget("three half-planes", "halfplane_three_regions.json", 2, 3, True),
    Gadget("four base-line rectangles", "baseline_four_rects.json", 2, 4, True),
    Gadget("three base-line points", "baseline_three_points.json", 2, 3, True),
)


def twelve_point_triples(h: Hypergraph) -> bool:
    """The triples that force a third color on the twelve-point set."""
    pts = list(range(12))  # x-order, 0-based
    wanted = []
    for pair, block in (((3, 4), (0, 1, 2)), ((4, 5), (6, 7, 8)), ((3, 5), (9, 10, 11))):
        wanted.append(block)
        wanted.extend(tuple(sorted(pair + (x,))) for x in block)
    return h.vertex_count == len(pts) and all(t in h.edges for t in wanted)


@dataclass
class Certificate:
    gadget: Gadget
    found: int | None
    below_fails: bool
    structure_ok: bool
    seconds: float
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.found == self.gadget.expected and self.below_fails and self.structure_ok


def certify(g: Gadget) -> Certificate:
    start = time.perf_counter()
    inst = g.load()
    h = enumerate_hyperedges(inst.items, inst.family)
    found = exact_chromatic(h, g.k, g.expected).colors
    below = exact_chromatic(h, g.k, g.expected - 1).colors is None
    structure = True
    if g.private_pairs:
        structure = all(pair in h.edges for pair in itertools.combinations(range(len(inst)), 2))
    if g.filename == "bottomless_twelve_points.json":
        structure = twelve_point_triples(h)
    return Certificate(g, found, below, structure, time.perf_counter() - start)


def certify_constructions() -> list[Certificate]:
    return [certify(g) for g in GADGETS]


# -- conflict-free colorings -----------------------------------------------------

def cf_bound(n: int, c: int) -> int:
    """ceil(log n / log(c / (c - 1))) + 1 colors."""
    if n <= 1:
        return 1
    return math.ceil(math.log(n) / math.log(c / (c - 1))) + 1


def cf_from_proper(items: Sequence, family: Family | str, k: int) -> Coloring:
    """cf_(k-1) coloring: repeatedly color the remaining items k-properly,
    peel off a largest class (smallest color on ties) under a fresh color."""
    algorithm = route(family, k).algorithm
    remaining = list(range(len(items)))
    out = [0] * len(items)
    fresh = 0
    while remaining:
        col = algorithm([items[i] for i in remaining])
        classes = col.classes()
        best = min(classes, key=lambda c: (-len(classes[c]), c))
        for j in classes[best]:
            out[remaining[j]] = fresh
        taken = set(classes[best])
        remaining = [v for j, v in enumerate(remaining) if j not in taken]
        fresh += 1
    return Coloring(max(fresh, 1), out)
