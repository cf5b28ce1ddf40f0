"""Compare the cell and candidate algorithms for c^J(a) on random simplicial cones.

Also reports how often the literal candidate filter (no relative-boundary
condition) disagrees.

    python scripts/random_crosscheck.py --n 200 --seed 1
"""
import argparse
import itertools
import random
from collections import Counter

from fthresh import thresholds as T
from fthresh.cones import DualPair
from fthresh.ideals import make_ideal


def random_cone(rng, d):
    while True:
        rays = [tuple(rng.randint(-1, 2) for _ in range(d)) for _ in range(d)]
        try:
            dp = DualPair(rays)
        except ValueError:
            continue
        if len(dp.v) == d:
            return dp


def random_m_primary(rng, dp, pts, k):
    gens = rng.sample(pts, min(k, len(pts)))
    for u in dp.u:
        k = rng.randint(1, 3)
        gens.append(tuple(k * x for x in u))
    return make_ideal(dp, gens)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tally = Counter()
    for i in range(args.n):
        d = rng.choice([2, 3])
        dp = random_cone(rng, d)
        pts = [p for p in itertools.product(range(-4, 5), repeat=d) if any(p) and dp.in_dual(p)]
        a = random_m_primary(rng, dp, pts, rng.randint(1, 3))
        J = random_m_primary(rng, dp, pts, rng.randint(1, 4))
        cells = T.f_threshold(dp, a, J).value
        relative = T.f_threshold_candidates(dp, a, J).value
        literal = T.f_threshold_candidates(dp, a, J, relative=False).value
        tally["agree" if cells == relative else "DISAGREE"] += 1
        if literal != cells:
            tally["literal filter off"] += 1
            print(f"[{i}] rays={list(dp.v)} a={list(a.generators)} J={list(J.generators)} "
                  f"cells={cells} literal={literal}")
    print(dict(tally))


if __name__ == "__main__":
    main()
