"""Instance and coloring files, plus the seeded random generator."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from .geom import (
    BaselineRect,
    BottomlessRect,
    Family,
    HalfPlane,
    Point,
    Region,
    as_rational,
    validate_general_position,
)
from .oracle import Coloring

MAX_RETRIES = 100

# JSON key holding the items of each family
_KEYS = {
    Family.B_POINTS: "points",
    Family.H_POINTS: "points",
    Family.BPRIME_POINTS: "points",
    Family.B_RECTS: "rects",
    Family.H_RECTS: "halfplanes",
    Family.BPRIME_RECTS: "baseline_rects",
}


class InstanceFormatError(ValueError):
    """Malformed instance or coloring file."""


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Instance:
    family: Family
    items: tuple

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "items", tuple(self.items))

    def __len__(self):
        return len(self.items)


def _num_out(v):
    if isinstance(v, int):
        return v
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _num_in(v):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise InstanceFormatError(f"expected an integer or 'p/q' string, got {v!r}")
    try:
        return as_rational(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise InstanceFormatError(f"bad number {v!r}") from exc


def item_to_json(item):
    if isinstance(item, Point):
        return [_num_out(item.x), _num_out(item.y)]
    if isinstance(item, BottomlessRect):
        return {"a": _num_out(item.a), "b": _num_out(item.b), "c": _num_out(item.c)}
    if isinstance(item, BaselineRect):
        return {"a": _num_out(item.a), "b": _num_out(item.b),
                "bottom": _num_out(item.bottom), "top": _num_out(item.top)}
    if isinstance(item, HalfPlane):
        return {"slope": _num_out(item.slope), "intercept": _num_out(item.intercept),
                "region": item.region.value}
    raise TypeError(f"cannot serialise {item!r}")


def _item_in(raw, family: Family):
    try:
        if _KEYS[family] == "points":
            if not isinstance(raw, list) or len(raw) != 2:
                raise InstanceFormatError(f"point must be a pair, got {raw!r}")
            return Point(_num_in(raw[0]), _num_in(raw[1]))
        if family is Family.B_RECTS:
            return BottomlessRect(_num_in(raw["a"]), _num_in(raw["b"]), _num_in(raw["c"]))
        if family is Family.BPRIME_RECTS:
            return BaselineRect(_num_in(raw["a"]), _num_in(raw["b"]),
                                _num_in(raw["bottom"]), _num_in(raw["top"]))
        return HalfPlane(_num_in(raw["slope"]), _num_in(raw["intercept"]),
                         Region(raw["region"]))
    except InstanceFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceFormatError(f"bad {family.value} item {raw!r}: {exc}") from exc


def instance_to_dict(inst: Instance) -> dict:
    items = [item_to_json(i) for i in inst.items]
    return {"family": inst.family.value, _KEYS[inst.family]: items}


def instance_from_dict(data: dict) -> Instance:
    if not isinstance(data, dict) or "family" not in data:
        raise InstanceFormatError("instance needs a 'family' field")
    family = Family(data["family"])  # ValueError for unknown families is left to callers
    key = _KEYS[family]
    if not isinstance(data.get(key), list):
        raise InstanceFormatError(f"instance of {family.value} needs a '{key}' list")
    return Instance(family, [_item_in(raw, family) for raw in data[key]])


def dumps_instance(inst: Instance) -> str:
    return json.dumps(instance_to_dict(inst)) + "\n"


def loads_instance(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(str(exc)) from exc
    return instance_from_dict(data)


def load_instance(path) -> Instance:
    return loads_instance(Path(path).read_text())


def save_instance(inst: Instance, path) -> None:
    Path(path).write_text(dumps_instance(inst))


def coloring_to_dict(col: Coloring) -> dict:
    return {"palette": col.palette_size, "colors": list(col.colors)}


def coloring_from_dict(data) -> Coloring:
    try:
        colors = data["colors"]
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in colors):
            raise InstanceFormatError("colors must be integers")
        return Coloring(int(data["palette"]), colors)
    except InstanceFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceFormatError(f"bad coloring: {exc}") from exc


def loads_coloring(text: str) -> Coloring:
    try:
        return coloring_from_dict(json.loads(text))
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(str(exc)) from exc


def dumps_coloring(col: Coloring) -> str:
    return json.dumps(coloring_to_dict(col)) + "\n"


# -- generation ---------------------------------------------------------------

def _interval(rng: random.Random, hi: int):
    """A random open interval inside [0, hi] with a mix of short and long widths."""
    a = rng.randint(0, hi - 1)
    span = hi - a
    width = rng.randint(1, max(1, span // rng.choice((1, 4, 16))))
    return a, a + width


def _draw(family: Family, n: int, rng: random.Random) -> list:
    hi = 10 * n * n
    half = max(1, 5 * n * n)
    if family in (Family.B_POINTS, Family.H_POINTS):
        return [Point(rng.randint(0, hi), rng.randint(0, hi)) for _ in range(n)]
    if family is Family.BPRIME_POINTS:
        return [Point(rng.randint(0, hi), rng.choice((-1, 1)) * rng.randint(1, half))
                for _ in range(n)]
    if family is Family.B_RECTS:
        return [BottomlessRect(*_interval(rng, hi), rng.randint(0, hi)) for _ in range(n)]
    if family is Family.BPRIME_RECTS:
        return [BaselineRect(*_interval(rng, hi), -rng.randint(1, half), rng.randint(1, half))
                for _ in range(n)]
    return [HalfPlane(rng.randint(-half, half), rng.randint(-half, half),
                      rng.choice((Region.ABOVE, Region.BELOW))) for _ in range(n)]


def generate(family: Family | str, n: int, seed: int) -> Instance:
    """Seeded random instance in general position (reject and retry)."""
    family = Family(family)
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    for _ in range(MAX_RETRIES):
        items = _draw(family, n, rng)
        if validate_general_position(items, family) is None:
            return Instance(family, items)
    raise GenerationError(f"no general-position {family.value} instance of size {n} "
                          f"after {MAX_RETRIES} tries (seed {seed})")


def generate_items(family: Family | str, n: int, seed: int) -> list:
    return list(generate(family, n, seed).items)

