"""Look for half-plane families with no 3-proper 2-coloring.

Whether two colors always suffice for half-planes at k=3 is open; the
shipped k=3 route uses three colors. This random search tries small
families and prints any obstruction it finds, with its hyperedges. Finding
none is evidence, not proof.

    python3 scripts/chi3_halfplane_search.py --trials 2000 --max-n 9
"""
import argparse
import random

from geocolor.geom import HalfPlane, Region, validate_general_position
from geocolor.instances import Instance, dumps_instance
from geocolor.lab import exact_chromatic
from geocolor.oracle import enumerate_dual_halfplane


def random_family(rng, n, spread):
    return [HalfPlane(rng.randint(-spread, spread), rng.randint(-spread, spread),
                      rng.choice((Region.ABOVE, Region.BELOW))) for _ in range(n)]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=2000)
    parser.add_argument("--min-n", type=int, default=4)
    parser.add_argument("--max-n", type=int, default=9)
    parser.add_argument("--spread", type=int, default=6)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    tried = found = 0
    for _ in range(args.trials):
        n = rng.randint(args.min_n, args.max_n)
        hs = random_family(rng, n, args.spread)
        if validate_general_position(hs, "h-rects") is not None:
            continue
        tried += 1
        h = enumerate_dual_halfplane(hs)
        if exact_chromatic(h, 3, 2).colors is None:
            found += 1
            print("obstruction:", dumps_instance(Instance("h-rects", hs)).strip())
            print("  hyperedges of size >= 3:", h.at_least(3))
    print(f"{tried} families in general position searched, {found} need a third color")


if __name__ == "__main__":
    main()
