"""Rational polyhedral cones, duality, Hilbert bases and Gorenstein data.

Conventions: ``sigma`` lives in N and is spanned by the primitive rays
``v_j``; its dual ``sigma_dual`` lives in M.  The facet normals of
``sigma_dual`` are exactly the rays of ``sigma`` and vice versa, so
``u in sigma_dual`` is tested by ``<u, v_j> >= 0`` for every ray ``v_j``.
"""
from __future__ import annotations

import itertools
import threading
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from . import kernel as K
from .errors import DegenerateCone, DimensionMismatch, NoSolution, NonUniqueSolution


def _dedupe_primitive(vectors) -> list[tuple[int, ...]]:
    seen = []
    for v in vectors:
        p = K.clear_denominators(v)
        if p not in seen:
            seen.append(p)
    return seen


def _independent_subset(vectors) -> list[int]:
    """Indices of a greedy maximal linearly independent subset."""
    chosen: list[int] = []
    for i, v in enumerate(vectors):
        if K.rank([vectors[j] for j in chosen] + [v]) > len(chosen):
            chosen.append(i)
    return chosen


def double_description(generators: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Facet normals of the full-dimensional pointed cone spanned by ``generators``.

    Incremental double description on the polar cone
    ``{y : <g, y> >= 0 for all g}``: start from the simplicial cone cut out by
    ``d`` independent generators and add the remaining half-spaces one at a
    time, combining adjacent positive/negative rays.  Adjacency is decided by
    the rank of the common tight set (algebraic test).
    """
    gens = [tuple(int(x) for x in g) for g in generators]
    d = len(gens[0])
    base = _independent_subset(gens)
    if len(base) < d:
        raise DegenerateCone("DegenerateCone: generators do not span the ambient space")

    B = [gens[i] for i in base]
    # columns of B^{-1} are the extreme rays of {y : B y >= 0}
    rays = []
    for k in range(d):
        e = [0] * d
        e[k] = 1
        col = K.solve_linear(B, e)
        rays.append(K.clear_denominators(col))
    processed = list(base)

    def tight(y):
        return frozenset(i for i in processed if K.dot(gens[i], y) == 0)

    tight_sets = [tight(y) for y in rays]

    for k in range(len(gens)):
        if k in base:
            continue
        g = gens[k]
        vals = [K.dot(g, y) for y in rays]
        pos = [i for i, a in enumerate(vals) if a > 0]
        neg = [i for i, a in enumerate(vals) if a < 0]
        zero = [i for i, a in enumerate(vals) if a == 0]
        new_rays = [rays[i] for i in pos + zero]
        for ip in pos:
            for ineg in neg:
                common = tight_sets[ip] & tight_sets[ineg]
                if len(common) < d - 2 or K.rank([gens[i] for i in common]) != d - 2:
                    continue
                y = K.sub(K.scale(vals[ip], rays[ineg]), K.scale(vals[ineg], rays[ip]))
                y = K.primitive_vector(y)
                if y not in new_rays:
                    new_rays.append(y)
        processed.append(k)
        rays = new_rays
        tight_sets = [tight(y) for y in rays]
    return sorted(rays)


def facets_brute_force(generators) -> list[tuple[int, ...]]:
    """Facet normals by enumerating (d-1)-subsets.  Independent check of DD."""
    gens = [tuple(int(x) for x in g) for g in generators]
    d = len(gens[0])
    out = set()
    for sub in itertools.combinations(gens, d - 1):
        if K.rank(sub) != d - 1:
            continue
        (n,) = K.nullspace(sub, d)
        n = K.clear_denominators(n)
        vals = [K.dot(n, g) for g in gens]
        if all(v >= 0 for v in vals):
            out.add(n)
        elif all(v <= 0 for v in vals):
            out.add(tuple(-a for a in n))
    return sorted(out)


@dataclass(frozen=True)
class Cone:
    """A full-dimensional, strongly convex rational cone in V- and H-form."""

    dim: int
    rays: tuple
    facet_normals: tuple

    @classmethod
    def from_rays(cls, rays, dim: int | None = None) -> "Cone":
        rays = [tuple(int(x) for x in r) for r in rays]
        if not rays:
            raise DegenerateCone("DegenerateCone: no rays given")
        if dim is None:
            dim = len(rays[0])
        if any(len(r) != dim for r in rays):
            raise DimensionMismatch("ray length does not match the dimension")
        prim = _dedupe_primitive(rays)
        if K.rank(prim) != dim:
            raise DegenerateCone("DegenerateCone: rays do not span the ambient space")
        # pointed <=> {u : <u, r> >= 1} is feasible
        res = K.lp_maximize((0,) * dim, [K.constraint(r, K.GE, 1) for r in prim])
        if res.status != K.OPTIMAL:
            raise DegenerateCone("DegenerateCone: cone is not strongly convex")
        normals = double_description(prim)
        extreme = []
        for r in prim:
            t = [n for n in normals if K.dot(n, r) == 0]
            if len(t) >= dim - 1 and K.rank(t) == dim - 1:
                extreme.append(r)
            else:
                warnings.warn(f"dropping non-extreme ray {r}", stacklevel=2)
        return cls(dim, tuple(extreme), tuple(normals))

    def dual(self) -> "Cone":
        return Cone(self.dim, self.facet_normals, self.rays)

    def contains(self, u) -> bool:
        self._check(u)
        return all(K.dot(u, n) >= 0 for n in self.facet_normals)

    def contains_strict(self, u) -> bool:
        self._check(u)
        return all(K.dot(u, n) > 0 for n in self.facet_normals)

    def _check(self, u):
        if len(u) != self.dim:
            raise DimensionMismatch(f"expected a vector of length {self.dim}, got {len(u)}")

    def same_as(self, other: "Cone") -> bool:
        return sorted(self.rays) == sorted(other.rays)


def dual_cone(rays, dim: int | None = None) -> Cone:
    return Cone.from_rays(rays, dim).dual()


def is_simplicial(c: Cone) -> bool:
    return len(c.rays) == c.dim


def is_smooth(c: Cone) -> bool:
    return is_simplicial(c) and abs(K.determinant(c.rays)) == 1


# ------------------------------------------------------------ triangulation

def _local_coordinates(vectors):
    """Express vectors in a basis of their span; returns integer vectors."""
    basis = [vectors[i] for i in _independent_subset(vectors)]
    k = len(basis)
    A = [[basis[c][r] for c in range(k)] for r in range(len(vectors[0]))]
    out = []
    for v in vectors:
        try:
            x = K.solve_linear(A, v)
        except NonUniqueSolution as exc:  # pragma: no cover - basis is independent
            x = exc.particular
        out.append(K.clear_denominators(x))
    return out, k


def _facet_index_sets(vectors) -> list[frozenset[int]]:
    coords, k = _local_coordinates(vectors)
    if k == 1:
        return [frozenset()]
    normals = double_description(coords)
    return [frozenset(i for i, c in enumerate(coords) if K.dot(n, c) == 0) for n in normals]


def fan_triangulation(rays) -> list[tuple[int, ...]]:
    """Simplicial subdivision by coning from the lexicographically first ray.

    ``rays`` must be the extreme rays of a pointed cone.  Returns index tuples
    into ``rays``; each tuple spans a simplicial cone of full dimension.
    """
    rays = [tuple(r) for r in rays]
    idx = list(range(len(rays)))
    return _triangulate(rays, idx)


def _triangulate(rays, idx):
    vecs = [rays[i] for i in idx]
    k = K.rank(vecs)
    if len(idx) == k:
        return [tuple(sorted(idx))]
    apex = min(idx, key=lambda i: rays[i])
    out = []
    for F in _facet_index_sets(vecs):
        face = [idx[j] for j in sorted(F)]
        if apex in face:
            continue
        for simplex in _triangulate(rays, face):
            out.append(tuple(sorted(simplex + (apex,))))
    return out


# --------------------------------------------------------------- Hilbert basis

def _box_points(lo, hi):
    return itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi)))


def parallelepiped_points(rays) -> list[tuple[int, ...]]:
    """Lattice points of the half-open parallelepiped ``{sum l_i r_i, 0 <= l_i < 1}``."""
    d = len(rays[0])
    R = [[rays[c][r] for c in range(d)] for r in range(d)]
    inv_cols = [K.solve_linear(R, [1 if i == k else 0 for i in range(d)]) for k in range(d)]
    # lambda = R^{-1} p  ->  lambda_i = sum_k inv[i][k] p_k
    inv = [[inv_cols[k][i] for k in range(d)] for i in range(d)]
    lo = [sum(min(r[k], 0) for r in rays) for k in range(d)]
    hi = [sum(max(r[k], 0) for r in rays) for k in range(d)]
    pts = []
    for p in _box_points(lo, hi):
        lam = [K.dot(row, p) for row in inv]
        if all(0 <= x < 1 for x in lam):
            pts.append(tuple(p))
    return pts


def reduce_to_irreducibles(candidates, cone: Cone) -> list[tuple[int, ...]]:
    """Keep the elements not expressible as a sum of two nonzero semigroup elements.

    Valid when ``candidates`` generate the semigroup ``cone ∩ Z^d``.
    """
    cands = sorted({tuple(c) for c in candidates if any(c)})
    out = []
    for x in cands:
        if not any(g != x and cone.contains(K.sub(x, g)) for g in cands):
            out.append(x)
    return out


def hilbert_basis_of_cone(cone: Cone) -> list[tuple[int, ...]]:
    if is_simplicial(cone):
        pieces = [cone.rays]
    else:
        pieces = [[cone.rays[i] for i in s] for s in fan_triangulation(cone.rays)]
    cands = set()
    for piece in pieces:
        cands.update(tuple(r) for r in piece)
        cands.update(parallelepiped_points(piece))
    return reduce_to_irreducibles(cands, cone)


# -------------------------------------------------------------- dual pair

@dataclass(frozen=True)
class GorensteinData:
    omega: tuple | None
    index: int | None
    non_unique: bool = False

    @property
    def is_gorenstein(self) -> bool:
        return self.index == 1


class DualPair:
    """The cone ``sigma`` in N together with ``sigma_dual`` in M."""

    def __init__(self, sigma_rays, dim: int | None = None):
        self.sigma = Cone.from_rays(sigma_rays, dim)
        self.sigma_dual = self.sigma.dual()
        self._hb = None
        self._lock = threading.Lock()

    @property
    def dim(self) -> int:
        return self.sigma.dim

    @property
    def v(self) -> tuple:
        """Primitive rays of sigma (= facet normals of sigma_dual)."""
        return self.sigma.rays

    @property
    def u(self) -> tuple:
        """Primitive rays of sigma_dual."""
        return self.sigma_dual.rays

    def pairings(self, x) -> tuple:
        return tuple(K.dot(x, vj) for vj in self.v)

    def in_dual(self, x) -> bool:
        return self.sigma_dual.contains(x)

    @property
    def hilbert_basis(self) -> list[tuple[int, ...]]:
        if self._hb is None:
            with self._lock:
                if self._hb is None:
                    self._hb = hilbert_basis_of_cone(self.sigma_dual)
        return list(self._hb)

    def __repr__(self):
        return f"DualPair(sigma={list(self.sigma.rays)})"


def hilbert_basis(dp: DualPair) -> list[tuple[int, ...]]:
    return dp.hilbert_basis


def gorenstein_data(dp: DualPair) -> GorensteinData:
    """Solve ``<omega, v_j> = 1`` over all rays of sigma."""
    ones = [1] * len(dp.v)
    non_unique = False
    try:
        omega = K.solve_linear(dp.v, ones)
    except NoSolution:
        return GorensteinData(None, None)
    except NonUniqueSolution as exc:  # only reachable for rank-deficient input
        omega, non_unique = exc.particular, True
    index = lcm(*(Fraction(x).denominator for x in omega))
    return GorensteinData(tuple(omega), index, non_unique)
