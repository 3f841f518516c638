"""Command-line front end: gen | color | verify | chromatic | cf | render."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .dispatch import UnsupportedRoute, route
from .geom import Family, perturb, validate_general_position
from .instances import (
    GenerationError,
    Instance,
    InstanceFormatError,
    coloring_to_dict,
    dumps_coloring,
    dumps_instance,
    generate,
    item_to_json,
    loads_coloring,
    loads_instance,
)
from .lab import SearchBudgetExceeded, cf_from_proper, exact_chromatic
from .oracle import enumerate_hyperedges, verify_instance
from .render import render_svg
from .streaming import verify_cf_instance

EXIT_INVALID, EXIT_ROUTE, EXIT_PARSE, EXIT_VALIDATION, EXIT_BUDGET = 1, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _family(name):
    try:
        return Family(name)
    except ValueError:
        known = ", ".join(f.value for f in Family)
        raise CliError(EXIT_ROUTE, f"unknown family {name!r} (known: {known})") from None


def _read(path) -> str:
    try:
        return sys.stdin.read() if path in (None, "-") else Path(path).read_text()
    except OSError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from exc


def _emit(text: str, out) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _load(args) -> Instance:
    text = _read(args.inp)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_PARSE, f"instance is not JSON: {exc}") from exc
    if isinstance(data, dict) and "family" in data:
        _family(data["family"])
    try:
        inst = loads_instance(text)
    except InstanceFormatError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from exc
    except (ValueError, TypeError) as exc:  # invariant failures such as a >= b
        raise CliError(EXIT_VALIDATION, str(exc)) from exc
    if getattr(args, "family", None) and _family(args.family) is not inst.family:
        raise CliError(EXIT_VALIDATION,
                       f"--family {args.family} does not match file family {inst.family.value}")
    if getattr(args, "perturb", False):
        return Instance(inst.family, perturb(list(inst.items), inst.family))
    violation = validate_general_position(inst.items, inst.family)
    if violation is not None:
        raise CliError(EXIT_VALIDATION, f"not in general position: {violation} "
                                        "(use --perturb)")
    return inst


def _route(family, k):
    try:
        return route(family, k)
    except UnsupportedRoute as exc:
        raise CliError(EXIT_ROUTE, str(exc)) from exc


def _describe(witness):
    if witness is None:
        return None
    try:
        return item_to_json(witness)
    except TypeError:
        return str(witness)


def cmd_gen(args) -> int:
    family = _family(args.family)
    if args.n < 1:
        raise CliError(EXIT_VALIDATION, "--n must be at least 1")
    try:
        inst = generate(family, args.n, args.seed)
    except GenerationError as exc:
        raise CliError(EXIT_VALIDATION, str(exc)) from exc
    _emit(dumps_instance(inst), args.out)
    return 0


def cmd_color(args) -> int:
    inst = _load(args)
    r = _route(inst.family, args.k)
    _emit(dumps_coloring(r.algorithm(list(inst.items))), args.out)
    return 0


def cmd_verify(args) -> int:
    inst = _load(args)
    try:
        col = loads_coloring(_read(args.coloring))
    except InstanceFormatError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from exc
    if len(col) != len(inst):
        raise CliError(EXIT_VALIDATION,
                       f"coloring has {len(col)} entries for {len(inst)} items")
    if args.cf:
        verdict = verify_cf_instance(list(inst.items), inst.family, col, args.k)
    else:
        verdict = verify_instance(list(inst.items), inst.family, col, args.k)
    report = {"valid": verdict.valid, "k": args.k, "mode": "cf" if args.cf else "proper",
              "witness": list(verdict.witness) if verdict.witness else None,
              "region": _describe(verdict.region)}
    _emit(json.dumps(report) + "\n", args.out)
    return 0 if verdict.valid else EXIT_INVALID


def cmd_chromatic(args) -> int:
    inst = _load(args)
    h = enumerate_hyperedges(list(inst.items), inst.family)
    try:
        res = exact_chromatic(h, args.k, args.max_colors)
    except SearchBudgetExceeded as exc:
        raise CliError(EXIT_BUDGET, str(exc)) from exc
    report = {"k": args.k, "max_colors": args.max_colors,
              "result": res.colors if res.colors is not None else "none",
              "witness": coloring_to_dict(res.witness) if res.witness else None,
              "nodes": res.nodes}
    _emit(json.dumps(report) + "\n", args.out)
    return 0


def cmd_cf(args) -> int:
    inst = _load(args)
    _route(inst.family, args.k)
    _emit(dumps_coloring(cf_from_proper(list(inst.items), inst.family, args.k)), args.out)
    return 0


def cmd_render(args) -> int:
    inst = _load(args)
    col = None
    if args.coloring:
        try:
            col = loads_coloring(_read(args.coloring))
        except InstanceFormatError as exc:
            raise CliError(EXIT_PARSE, str(exc)) from exc
        if len(col) != len(inst):
            raise CliError(EXIT_VALIDATION, "coloring and instance sizes differ")
    _emit(render_svg(inst, col), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geocolor", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, inp=True, k=True):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--out", help="output path (stdout when omitted)")
        if inp:
            p.add_argument("--in", dest="inp", help="instance JSON (stdin when omitted)")
            p.add_argument("--family", help="expected family of the instance")
            p.add_argument("--perturb", action="store_true",
                           help="perturb into general position instead of rejecting")
        if k:
            p.add_argument("--k", type=int, required=True)
        return p

    g = add("gen", cmd_gen, "random instance in general position", inp=False, k=False)
    g.add_argument("--family", required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    add("color", cmd_color, "color an instance")
    v = add("verify", cmd_verify, "check a coloring against the hyperedge oracle")
    v.add_argument("--coloring", required=True)
    v.add_argument("--cf", action="store_true", help="check cf_k instead of k-proper")
    c = add("chromatic", cmd_chromatic, "exhaustive chromatic number search")
    c.add_argument("--max-colors", type=int, default=4)
    add("cf", cmd_cf, "conflict-free coloring from repeated proper colorings")
    r = add("render", cmd_render, "SVG drawing", k=False)
    r.add_argument("--coloring")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"geocolor: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
