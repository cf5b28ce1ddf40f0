"""Invariants of the maximal ideal on the cone over a quadric (non-simplicial, 3-d).

    python scripts/quadric_cone.py [--p 2] [--e-max 3]
"""
import argparse

from fthresh import kernel as K
from fthresh import thresholds as T
from fthresh.cones import DualPair, gorenstein_data, is_simplicial
from fthresh.ideals import maximal_monomial_ideal
from fthresh.oracle import convergence_table

RAYS = [(1, 0, 0), (0, 1, 0), (-1, 0, 1), (0, -1, 1)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--e-max", type=int, default=3)
    args = ap.parse_args()

    dp = DualPair(RAYS)
    m = maximal_monomial_ideal(dp)
    g = gorenstein_data(dp)
    print("dual rays       ", list(dp.u))
    print("simplicial      ", is_simplicial(dp.sigma))
    print("Hilbert basis   ", list(dp.hilbert_basis))
    print("omega, index    ", [K.fmt_rational(x) for x in g.omega], g.index)
    for label, tv in (("fpt(m)", T.fpt(dp, m)), ("c^m(m)", T.f_threshold(dp, m, m))):
        print(f"{label:16s}{K.fmt_rational(tv.value)}  witness {[K.fmt_rational(x) for x in tv.witness]}")

    table = convergence_table(m, m, args.p, args.e_max)
    print(f"\n{'e':>3} {'q':>5} {'nu':>5}  ratio")
    for r in table.rows:
        ratio = "-" if r.ratio is None else K.fmt_rational(r.ratio)
        print(f"{r.e:>3} {r.q:>5} {str(r.nu):>5}  {ratio}")
    print("limit", K.fmt_rational(table.limit))


if __name__ == "__main__":
    main()
