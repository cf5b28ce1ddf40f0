"""F-pure thresholds, F-thresholds, test ideals and F-jumping coefficients.

Every invariant here is a supremum of the piecewise-linear concave function
``lambda_a(u) = max{lam >= 0 : u in lam * P(a)}`` over some region.  Open
regions are replaced by their closures: ``lambda_a`` is continuous and each
convex cell used below is dense in its closure, so the supremum is attained
there and is the optimum of an exact LP.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import kernel as K
from .cones import DualPair, gorenstein_data, is_simplicial, is_smooth
from .errors import (EnumerationBoundExceeded, NotGorenstein, SimplicialRequired,
                     UnsupportedJ)
from .ideals import (MonomialIdeal, NewtonPolyhedron, in_radical, is_m_primary,
                     make_ideal, maximal_monomial_ideal, newton_polyhedron,
                     q_region_contains, unit_ideal)

CELLS, CANDIDATES, LP = "cells", "candidates", "lp"


@dataclass(frozen=True)
class ThresholdValue:
    value: Fraction
    witness: tuple
    method: str


@dataclass(frozen=True)
class JumpingChain:
    coefficients: tuple
    ideals: tuple
    witnesses: tuple = ()


@dataclass(frozen=True)
class TestIdealConfig:
    max_doublings: int = 10


@dataclass(frozen=True)
class RegularityReport:
    smooth: bool
    fpt: Fraction
    fthreshold: Fraction
    equal: bool


# ------------------------------------------------------------------ lambda

def lambda_value(P: NewtonPolyhedron, u) -> Fraction:
    """``sup{lam >= 0 : u in lam P}`` as a minimum over positive-offset facets.

    Zero-offset facets have normals in sigma, so every ``u`` in sigma_dual
    satisfies them for any scale.
    """
    if not P.dp.in_dual(u):
        raise ValueError(f"point {tuple(u)} is not in sigma_dual")
    ratios = [Fraction(K.dot(u, n)) / b for n, b in P.positive_facets]
    if not ratios:
        raise ValueError("lambda is unbounded for the unit ideal")
    return max(min(ratios), Fraction(0))


def _lambda_lp(P: NewtonPolyhedron, base, extra):
    """Maximize ``lambda(base + w)`` over ``w`` in sigma_dual with ``extra`` cuts on w.

    Variables are ``(w, t)``; returns an :class:`~fthresh.kernel.LPResult`
    whose point is ``w``.
    """
    d = P.dp.dim
    cons = []
    for n, b in P.positive_facets:
        # <base + w, n> >= t b
        cons.append(K.constraint(tuple(n) + (-b,), K.GE, -K.dot(base, n)))
    for vj in P.dp.v:
        cons.append(K.constraint(tuple(vj) + (0,), K.GE, 0))
    for normal, sense, offset in extra:
        cons.append(K.constraint(tuple(normal) + (0,), sense, offset))
    obj = (0,) * d + (1,)
    res = K.lp_maximize(obj, cons)
    if res.status == K.OPTIMAL:
        return K.LPResult(res.status, res.value, res.point[:d])
    return res


def _box_cuts(dp: DualPair, bounds):
    return [(vj, K.LE, b) for vj, b in zip(dp.v, bounds) if b is not None]


def _balanced_witness(P: NewtonPolyhedron, value, bounds):
    """An optimal point of the box ``<u, v_j> <= bounds_j`` with smallest max pairing.

    The optimal face of the lambda-LP is often not a single point; among its
    points this prefers the most central one (the pairing spread ``s`` is
    minimized).  Returns ``(s, u)``.
    """
    dp = P.dp
    d = dp.dim
    cons = [K.constraint(tuple(n) + (0,), K.GE, value * b) for n, b in P.positive_facets]
    for vj, bound in zip(dp.v, bounds):
        cons.append(K.constraint(tuple(vj) + (0,), K.GE, 0))
        cons.append(K.constraint(tuple(vj) + (-1,), K.LE, 0))
        if bound is not None:
            cons.append(K.constraint(tuple(vj) + (0,), K.LE, bound))
    res = K.lp_maximize((0,) * d + (-1,), cons)
    return -res.value, res.point[:d]


def fpt(dp: DualPair, I: MonomialIdeal) -> ThresholdValue:
    """F-pure threshold: max of lambda over ``{u in sigma_dual : <u, v_j> <= 1}``."""
    P = newton_polyhedron(I)
    box = [1] * len(dp.v)
    res = _lambda_lp(P, (0,) * dp.dim, _box_cuts(dp, box))
    return ThresholdValue(res.value, _balanced_witness(P, res.value, box)[1], LP)


def _mu(dp, P, u) -> ThresholdValue:
    res = _lambda_lp(P, u, _box_cuts(dp, [1] * len(dp.v)))
    return ThresholdValue(res.value, K.add(u, res.point), LP)


def mu_value(dp: DualPair, I: MonomialIdeal, u) -> Fraction:
    """``sup lambda(u + w)`` over ``w`` in sigma_dual with every ``<w, v_j> <= 1``."""
    return _mu(dp, newton_polyhedron(I), u).value


# ------------------------------------------------------------ F-thresholds

def _check_pair(I: MonomialIdeal, J: MonomialIdeal):
    if not is_m_primary(J):
        raise UnsupportedJ("UnsupportedJ: J must be m-primary")
    if not in_radical(I, J):
        raise UnsupportedJ("UnsupportedJ: a is not contained in the radical of J")


def complement_cells(dp: DualPair, J: MonomialIdeal) -> list[tuple]:
    """Upper-bound vectors of the convex cells covering ``sigma_dual \\ Q(J)``.

    ``u`` avoids ``b_i + sigma_dual`` iff ``<u, v_j> < <b_i, v_j>`` for some j,
    so the complement is the union over choice maps ``i -> j`` of the cells
    ``{u in sigma_dual : <u, v_j> < bound_j}``.  Choices with a nonpositive
    bound give empty cells and are skipped; cells contained in another cell
    are dropped.  ``None`` means no bound on that ray.
    """
    n = len(dp.v)
    states = {(None,) * n}
    for b in J.generators:
        bp = dp.pairings(b)
        nxt = set()
        for s in states:
            for j in range(n):
                if bp[j] > 0:
                    t = list(s)
                    t[j] = bp[j] if s[j] is None else min(s[j], bp[j])
                    nxt.add(tuple(t))
        states = _maximal_bounds(nxt)
    return sorted(states, key=lambda s: tuple((x is None, x or 0) for x in s))


def _le_bounds(s, t) -> bool:
    return all(y is None or (x is not None and x <= y) for x, y in zip(s, t))


def _maximal_bounds(states):
    states = list(states)
    return {s for s in states if not any(t != s and _le_bounds(s, t) for t in states)}


def f_threshold(dp: DualPair, I: MonomialIdeal, J: MonomialIdeal | None = None) -> ThresholdValue:
    """``c^J(a) = sup lambda_a`` over ``sigma_dual \\ Q(J)`` by cell decomposition."""
    if J is None:
        J = maximal_monomial_ideal(dp)
    _check_pair(I, J)
    P = newton_polyhedron(I)
    best, optimal = None, []
    for bounds in complement_cells(dp, J):
        strict = [K.constraint(vj, K.GE, 0) for vj in dp.v]
        strict += [K.constraint(vj, K.LT, b) for vj, b in zip(dp.v, bounds) if b is not None]
        if K.lp_strict_interior(strict, dp.dim) is None:
            continue
        res = _lambda_lp(P, (0,) * dp.dim, _box_cuts(dp, bounds))
        if res.status == K.UNBOUNDED:
            raise UnsupportedJ("UnsupportedJ: supremum is not finite")
        if best is None or res.value > best:
            best, optimal = res.value, [bounds]
        elif res.value == best:
            optimal.append(bounds)
    if best is None:
        raise UnsupportedJ("UnsupportedJ: complement of Q(J) is empty")
    # ties between cells: most central witness, then enumeration order
    spread, witness = min((_balanced_witness(P, best, b) for b in optimal), key=lambda r: r[0])
    return ThresholdValue(best, witness, CELLS)


def candidate_points(dp: DualPair, J: MonomialIdeal, relative: bool = True) -> list[tuple]:
    """Points ``u`` with ``<u, v_j> = <b_{i_j}, v_j>`` lying on the boundary of Q(J).

    With ``relative=True`` a point is kept when, for every generator ``b``, some
    ray has ``<u, v_j> <= <b, v_j>`` with ``<b, v_j> > 0``; that is exactly
    membership in the closure of ``sigma_dual \\ Q(J)``.  ``relative=False``
    only asks ``u not in b + Int(sigma_dual)``, which also admits points on
    faces of sigma_dual that are interior to Q(J) relative to sigma_dual.
    """
    if not is_simplicial(dp.sigma):
        raise SimplicialRequired("SimplicialRequired: candidate method needs a simplicial cone")
    gens = J.generators
    gp = [dp.pairings(b) for b in gens]
    d = dp.dim
    out = []
    seen = set()
    for choice in itertools.product(range(len(gens)), repeat=d):
        rhs = [gp[i][j] for j, i in enumerate(choice)]
        u = K.solve_linear(dp.v, rhs)
        if u in seen:
            continue
        seen.add(u)
        if not dp.in_dual(u) or not q_region_contains(J, u):
            continue
        up = dp.pairings(u)
        if relative:
            ok = all(any(x <= y and y > 0 for x, y in zip(up, bp)) for bp in gp)
        else:
            ok = all(any(x <= y for x, y in zip(up, bp)) for bp in gp)
        if ok:
            out.append(u)
    return out


def f_threshold_candidates(dp: DualPair, I: MonomialIdeal, J: MonomialIdeal | None = None,
                           relative: bool = True) -> ThresholdValue:
    """``c^J(a)`` as the max of lambda over the finite boundary candidate set."""
    if J is None:
        J = maximal_monomial_ideal(dp)
    if not is_simplicial(dp.sigma):
        raise SimplicialRequired("SimplicialRequired: candidate method needs a simplicial cone")
    _check_pair(I, J)
    P = newton_polyhedron(I)
    best = None
    for u in candidate_points(dp, J, relative):
        val = lambda_value(P, u)
        if best is None or val > best.value:
            best = ThresholdValue(val, u, CANDIDATES)
    return best


# -------------------------------------------------------------- test ideals

def test_ideal_contains(dp: DualPair, I: MonomialIdeal, c, u, P: NewtonPolyhedron | None = None) -> bool:
    """Blickle's criterion: some ``w`` with ``<w, v_j> <= 1`` puts ``u + w`` in Int(cP)."""
    c = K.q(c)
    if P is None:
        P = newton_polyhedron(I)
    cons = [K.constraint(vj, K.LE, 1) for vj in dp.v]
    for n, b in P.facets:
        cons.append(K.constraint(n, K.GT, c * b - K.dot(u, n)))
    return K.lp_strict_interior(cons, dp.dim) is not None


def _lattice_points_in_box(dp: DualPair, bounds):
    """Lattice points ``u`` with ``0 <= <u, v_j> <= bounds_j``."""
    d = dp.dim
    cons = [K.constraint(vj, K.GE, 0) for vj in dp.v]
    cons += [K.constraint(vj, K.LE, b) for vj, b in zip(dp.v, bounds)]
    lo, hi = [], []
    for k in range(d):
        e = [0] * d
        e[k] = 1
        hi.append(math.floor(K.lp_maximize(e, cons).value))
        lo.append(math.ceil(-K.lp_maximize([-x for x in e], cons).value))
    pts = []
    for p in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        pv = dp.pairings(p)
        if all(0 <= x <= b for x, b in zip(pv, bounds)):
            pts.append(p)
    pts.sort(key=lambda p: (sum(dp.pairings(p)), p))
    return pts


def test_ideal_generators(dp: DualPair, I: MonomialIdeal, c,
                          config: TestIdealConfig = TestIdealConfig()) -> MonomialIdeal:
    """Minimal monomial generators of ``tau(a^c)``.

    Scans lattice points in ``0 <= <u, v_j> <= ceil(c M_j) + K_j`` (``M_j`` over
    Newton vertices, ``K_j`` over the Hilbert basis).  Every point found is a
    certified member; completeness is checked by requiring that each member
    in the outer shell of width ``K_j`` is already generated by members
    strictly inside.  The box doubles until that holds.
    """
    c = K.q(c)
    if c <= 0:
        raise ValueError("test ideal exponent must be positive")
    P = newton_polyhedron(I)
    Mj = [max(K.dot(w, vj) for w in P.vertices) for vj in dp.v]
    Kj = [max(K.dot(h, vj) for h in dp.hilbert_basis) for vj in dp.v]
    bounds = [math.ceil(c * m) + k for m, k in zip(Mj, Kj)]
    gens: list = []
    for _ in range(config.max_doublings + 1):
        # points come in increasing pairing sum, so a member not dominated by an
        # earlier member is a minimal generator
        gens, gens_pv = [], []
        for p in _lattice_points_in_box(dp, bounds):
            pv = dp.pairings(p)
            if any(all(x >= y for x, y in zip(pv, g)) for g in gens_pv):
                continue
            if test_ideal_contains(dp, I, c, p, P):
                gens.append(p)
                gens_pv.append(pv)
        if not gens:
            raise EnumerationBoundExceeded("EnumerationBoundExceeded: no members found", [])
        # shell certificate: members in the outer shell are generated from inside
        inner_limit = [b - k for b, k in zip(bounds, Kj)]
        if all(all(x <= lim for x, lim in zip(pv, inner_limit)) for pv in gens_pv):
            return MonomialIdeal(dp, tuple(sorted(gens)))
        bounds = [2 * b for b in bounds]
    raise EnumerationBoundExceeded(
        f"EnumerationBoundExceeded: shell certificate failed after {config.max_doublings} doublings",
        gens,
    )


def jumping_coefficients(dp: DualPair, I: MonomialIdeal, count: int,
                         config: TestIdealConfig = TestIdealConfig()) -> JumpingChain:
    """The first ``count`` F-jumping coefficients and their test ideals.

    ``c^i`` is the least ``mu(b)`` over generators ``b`` of ``tau(a^{c^{i-1}})``;
    members dominate generators and ``lambda`` is monotone, so the infimum
    over all members is attained at a generator.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    P = newton_polyhedron(I)
    tau = unit_ideal(dp)
    coeffs, ideals, witnesses = [], [], []
    for _ in range(count):
        best = None
        for b in tau.generators:
            tv = _mu(dp, P, b)
            if best is None or tv.value < best.value:
                best = tv
        tau = test_ideal_generators(dp, I, best.value, config)
        coeffs.append(best.value)
        ideals.append(tau)
        witnesses.append(best)
    return JumpingChain(tuple(coeffs), tuple(ideals), tuple(witnesses))


# ----------------------------------------------------------- applications

def gorenstein_witness_ideal(dp: DualPair) -> MonomialIdeal:
    g = gorenstein_data(dp)
    if not g.is_gorenstein:
        raise NotGorenstein("ring is not Gorenstein: no lattice point pairs to 1 with every ray")
    return make_ideal(dp, [K.as_int_vector(g.omega)])


def regularity_probe(dp: DualPair, I: MonomialIdeal) -> RegularityReport:
    if not is_simplicial(dp.sigma):
        raise SimplicialRequired("SimplicialRequired: regularity probe needs a simplicial cone")
    if not is_m_primary(I):
        raise ValueError("regularity probe needs an m-primary ideal")
    a = fpt(dp, I).value
    b = f_threshold(dp, I).value
    return RegularityReport(is_smooth(dp.sigma), a, b, a == b)


# keep pytest from collecting these when imported into test modules
test_ideal_contains.__test__ = False
test_ideal_generators.__test__ = False
TestIdealConfig.__test__ = False
