"""Wall-clock timings for the large-instance targets. Reported, never asserted.

    python3 scripts/benchmarks.py [--repeat 3]
"""
import argparse
import time

from geocolor.bottomless_dual import color_rects_b_k2, color_rects_b_k3
from geocolor.bottomless_primal import color_points_b_k2, color_points_b_k4
from geocolor.halfplane_dual import color_halfplanes_k2, color_halfplanes_k4
from geocolor.halfplane_primal import color_points_h_k2, color_points_h_k3
from geocolor.instances import generate_items

CASES = [
    ("b-points", 10**5, [color_points_b_k2, color_points_b_k4], 1.0),
    ("b-rects", 2000, [color_rects_b_k2, color_rects_b_k3], 10.0),
    ("h-rects", 2000, [color_halfplanes_k2, color_halfplanes_k4], 10.0),
    ("h-points", 2000, [color_points_h_k2, color_points_h_k3], None),
]


def best_of(fn, items, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(items)
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=1)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    for family, n, algos, target in CASES:
        items = generate_items(family, n, args.seed)
        for fn in algos:
            t = best_of(fn, items, args.repeat)
            verdict = "" if target is None else ("  ok" if t < target else "  SLOW")
            limit = "" if target is None else f" (target {target:g}s)"
            print(f"{family:9s} n={n:<6d} {fn.__name__:22s} {t:7.3f}s{limit}{verdict}")


if __name__ == "__main__":
    main()
