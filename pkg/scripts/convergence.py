"""Print nu(p^e)/p^e next to the exact F-threshold for ideals on the plane.

    python scripts/convergence.py --a 2,0 0,3 --j 1,0 0,1 --p 2 --e-max 5
"""
import argparse

from fthresh import kernel as K
from fthresh.cones import DualPair
from fthresh.ideals import make_ideal
from fthresh.oracle import OracleConfig, convergence_table


def vectors(items):
    return [tuple(int(x) for x in s.split(",")) for s in items]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rays", nargs="+", default=["1,0", "0,1"])
    ap.add_argument("--a", nargs="+", default=["2,0", "0,3"])
    ap.add_argument("--j", nargs="+", default=["1,0", "0,1"])
    ap.add_argument("--p", nargs="+", type=int, default=[2, 3])
    ap.add_argument("--e-max", type=int, default=4)
    args = ap.parse_args()

    dp = DualPair(vectors(args.rays))
    a, J = make_ideal(dp, vectors(args.a)), make_ideal(dp, vectors(args.j))
    cfg = OracleConfig.from_env()
    for p in args.p:
        table = convergence_table(a, J, p, args.e_max, cfg)
        print(f"p = {p}   limit {K.fmt_rational(table.limit)}")
        for r in table.rows:
            if r.nu is None:
                print(f"  e={r.e}: budget exhausted")
                continue
            gap = table.limit - r.ratio
            print(f"  e={r.e}  q={r.q:<4} nu={r.nu:<5} ratio={K.fmt_rational(r.ratio):<8} "
                  f"gap={K.fmt_rational(gap)}")


if __name__ == "__main__":
    main()
