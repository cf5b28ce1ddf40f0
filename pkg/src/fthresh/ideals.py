"""Monomial ideals of a toric ring, identified with their exponent vectors.

Membership in the staircase region ``Q(I)`` only needs the generators: a
monomial ``X^w`` of ``I`` is ``X^{g+s}`` for a generator ``g`` and
``s in sigma_dual``, so ``w + sigma_dual`` is already inside ``g + sigma_dual``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import kernel as K
from .cones import DualPair, double_description
from .errors import NotInSemigroup


@dataclass(frozen=True)
class MonomialIdeal:
    dp: DualPair
    generators: tuple

    @property
    def dim(self) -> int:
        return self.dp.dim

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    def contains(self, u) -> bool:
        return ideal_contains(self, u)

    def __repr__(self):
        return f"MonomialIdeal({list(self.generators)})"

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.generators == other.generators \
            and self.dp.sigma.rays == other.dp.sigma.rays

    def __hash__(self):
        return hash(self.generators)


def _minimalize(dp: DualPair, gens) -> tuple:
    gens = sorted(set(gens), key=lambda g: (sum(dp.pairings(g)), g))
    kept = []
    for g in gens:
        if not any(dp.in_dual(K.sub(g, h)) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


def make_ideal(dp: DualPair, exponents) -> MonomialIdeal:
    """Build an ideal from exponent vectors, keeping a minimal generating set."""
    exps = [tuple(e) for e in exponents]
    if not exps:
        raise ValueError("an ideal needs at least one generator")
    out = []
    for e in exps:
        if len(e) != dp.dim or not K.is_integral(e) or not dp.in_dual(e):
            raise NotInSemigroup(f"NotInSemigroup: exponent {e} is not in sigma_dual ∩ M")
        out.append(K.as_int_vector(e))
    return MonomialIdeal(dp, _minimalize(dp, out))


def unit_ideal(dp: DualPair) -> MonomialIdeal:
    return MonomialIdeal(dp, ((0,) * dp.dim,))


def ideal_contains(I: MonomialIdeal, u) -> bool:
    if not K.is_integral(u) or not I.dp.in_dual(u):
        return False
    return q_region_contains(I, u)


def q_region_contains(I: MonomialIdeal, u) -> bool:
    """Is the rational point ``u`` in ``Q(I) = union of g + sigma_dual``?"""
    return any(I.dp.in_dual(K.sub(u, g)) for g in I.generators)


def frobenius_power(I: MonomialIdeal, q: int) -> MonomialIdeal:
    """``I^{[q]}``, generated by ``q * g``.  ``q == 1`` is the identity."""
    if q < 1:
        raise ValueError("Frobenius exponent must be a positive prime power")
    if q == 1:
        return I
    return MonomialIdeal(I.dp, tuple(sorted(tuple(q * a for a in g) for g in I.generators)))


def ideal_power(I: MonomialIdeal, r: int) -> MonomialIdeal:
    if r < 0:
        raise ValueError("power must be nonnegative")
    if r == 0:
        return unit_ideal(I.dp)
    sums = set()
    for combo in itertools.combinations_with_replacement(I.generators, r):
        sums.add(tuple(sum(c) for c in zip(*combo)))
    return MonomialIdeal(I.dp, _minimalize(I.dp, sums))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.dp, _minimalize(I.dp, I.generators + J.generators))


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    return all(ideal_contains(J, g) for g in I.generators)


def maximal_monomial_ideal(dp: DualPair) -> MonomialIdeal:
    return MonomialIdeal(dp, _minimalize(dp, [h for h in dp.hilbert_basis if any(h)]))


def _eventually_enters(I: MonomialIdeal, w) -> bool:
    """Does ``lam * w`` lie in ``Q(I)`` for some ``lam > 0``?

    Per generator ``g`` the condition ``lam <w, v_j> >= <g, v_j>`` is solvable
    exactly when ``<g, v_j> <= 0`` on every ray with ``<w, v_j> = 0``.
    """
    wv = I.dp.pairings(w)
    return any(
        all(gv <= 0 for gv, x in zip(I.dp.pairings(g), wv) if x == 0)
        for g in I.generators
    )


def is_m_primary(I: MonomialIdeal) -> bool:
    """``sqrt(I) = m``: every extreme ray of sigma_dual eventually enters Q(I)."""
    if I.is_unit:
        return False
    return all(_eventually_enters(I, u) for u in I.dp.u)


def in_radical(a: MonomialIdeal, J: MonomialIdeal) -> bool:
    """``a ⊆ sqrt(J)``: some power of every generator of ``a`` lies in ``J``."""
    return all(any(g) and _eventually_enters(J, g) for g in a.generators)


# --------------------------------------------------------- Newton polyhedron

@dataclass(frozen=True)
class NewtonPolyhedron:
    """``P = intersection of {u : <u, normal> >= offset}`` with primitive normals."""

    dp: DualPair
    facets: tuple          # ((normal, offset), ...)
    vertices: tuple

    def contains(self, u) -> bool:
        return all(K.dot(u, n) >= b for n, b in self.facets)

    def contains_interior(self, u) -> bool:
        return all(K.dot(u, n) > b for n, b in self.facets)

    @property
    def positive_facets(self):
        return tuple((n, b) for n, b in self.facets if b > 0)


def newton_polyhedron(I: MonomialIdeal) -> NewtonPolyhedron:
    """H-representation of ``conv(generators) + sigma_dual``.

    Lift generators to height one and dual rays to height zero, dualize the
    resulting cone and slice it back at height one.
    """
    dp = I.dp
    lifted = [tuple(g) + (1,) for g in I.generators] + [tuple(u) + (0,) for u in dp.u]
    facets = []
    for nv in double_description(lifted):
        normal, mu = nv[:-1], nv[-1]
        if not any(normal):
            continue
        g = math.gcd(*normal)
        facets.append((K.primitive_vector(normal), Fraction(-mu, g)))
    facets = tuple(sorted(set(facets)))
    vertices = tuple(
        g for g in I.generators
        if K.rank([n for n, b in facets if K.dot(g, n) == b] or [(0,) * dp.dim]) == dp.dim
    )
    return NewtonPolyhedron(dp, facets, vertices)


def in_conv_plus_cone(I: MonomialIdeal, u) -> bool:
    """V-side membership ``u in conv(generators) + sigma_dual`` by an LP."""
    gens = I.generators
    rays = I.dp.u
    s, m, d = len(gens), len(rays), I.dim
    nvar = s + m
    cons = []
    for k in range(d):
        row = [g[k] for g in gens] + [r[k] for r in rays]
        cons.append(K.constraint(row, K.EQ, u[k]))
    cons.append(K.constraint([1] * s + [0] * m, K.EQ, 1))
    for i in range(nvar):
        e = [0] * nvar
        e[i] = 1
        cons.append(K.constraint(e, K.GE, 0))
    return K.lp_maximize((0,) * nvar, cons).status == K.OPTIMAL
