"""Exact rational arithmetic, linear algebra and a simplex LP solver.

Scalars are :class:`fractions.Fraction` (always normalized, arbitrary
precision); vectors are plain tuples of Fractions or ints.  Nothing in this
module ever touches a float.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import NoSolution, NonUniqueSolution, ZeroVector

GE, LE, EQ, GT, LT = ">=", "<=", "==", ">", "<"
OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"

_FLIP = {GE: LE, LE: GE, EQ: EQ, GT: LT, LT: GT}


# ---------------------------------------------------------------- scalars

def q(x) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def qvec(v: Iterable) -> tuple[Fraction, ...]:
    return tuple(q(x) for x in v)


def fmt_rational(x) -> str:
    """Serialize as ``"num/den"``; integers keep an explicit ``/1``."""
    x = q(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), 0)


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(k, v):
    return tuple(k * a for a in v)


def is_integral(v) -> bool:
    return all(q(a).denominator == 1 for a in v)


def as_int_vector(v) -> tuple[int, ...]:
    return tuple(int(q(a)) for a in v)


def primitive_vector(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for a in v:
        g = gcd(g, int(a))
    if g == 0:
        raise ZeroVector("ZeroVector: cannot normalize the zero vector")
    return tuple(int(a) // g for a in v)


def clear_denominators(v: Sequence) -> tuple[int, ...]:
    """Smallest positive integer multiple of a rational vector, made primitive."""
    v = qvec(v)
    m = lcm(*(a.denominator for a in v)) if v else 1
    return primitive_vector([int(a * m) for a in v])


# ---------------------------------------------------------- linear algebra

def _integer_rows(A) -> list[list[int]]:
    rows = []
    for row in A:
        row = qvec(row)
        m = lcm(*(a.denominator for a in row)) if row else 1
        rows.append([int(a * m) for a in row])
    return rows


def _bareiss_echelon(M: list[list[int]]):
    """Fraction-free row echelon form; returns (matrix, pivot columns)."""
    M = [r[:] for r in M]
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                M[i][j] = (M[r][c] * M[i][j] - M[i][c] * M[r][j]) // prev
            M[i][c] = 0
        prev = M[r][c]
        pivots.append(c)
        r += 1
    return M, pivots


def rank(A) -> int:
    A = list(A)
    if not A:
        return 0
    return len(_bareiss_echelon(_integer_rows(A))[1])


def solve_linear(A, b) -> tuple[Fraction, ...]:
    """Exact solution of ``A x = b``.

    Raises :class:`NoSolution` for inconsistent systems and
    :class:`NonUniqueSolution` (carrying a particular solution, free variables
    set to zero) when the rank is below the number of unknowns.
    """
    A = [qvec(r) for r in A]
    b = qvec(b)
    if len(A) != len(b):
        raise ValueError("row count of A must match length of b")
    d = len(A[0]) if A else 0
    aug = _integer_rows([row + (bi,) for row, bi in zip(A, b)])
    E, pivots = _bareiss_echelon(aug)
    if d in pivots:
        raise NoSolution("NoSolution: inconsistent linear system")
    x = [Fraction(0)] * d
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        acc = Fraction(E[r][d])
        for j in range(c + 1, d):
            acc -= E[r][j] * x[j]
        x[c] = acc / E[r][c]
    x = tuple(x)
    if len(pivots) < d:
        raise NonUniqueSolution("NonUnique: rank-deficient system", x)
    return x


def nullspace(A, d: int | None = None) -> list[tuple[Fraction, ...]]:
    """A basis of ``{x : A x = 0}`` by reduced row echelon form."""
    A = [list(qvec(r)) for r in A]
    if d is None:
        d = len(A[0])
    rows = [r[:] for r in A]
    pivots = []
    r = 0
    for c in range(d):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * bb for a, bb in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(d) if c not in pivots]
    basis = []
    for fcol in free:
        x = [Fraction(0)] * d
        x[fcol] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -rows[i][fcol]
        basis.append(tuple(x))
    return basis


def determinant(A) -> Fraction:
    A = [list(qvec(r)) for r in A]
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det *= A[c][c]
        for i in range(c + 1, n):
            f = A[i][c] / A[c][c]
            if f:
                A[i] = [a - f * bb for a, bb in zip(A[i], A[c])]
    return det


# ------------------------------------------------------------ simplex LP

@dataclass(frozen=True)
class Constraint:
    normal: tuple
    offset: Fraction
    sense: str

    def __post_init__(self):
        object.__setattr__(self, "normal", qvec(self.normal))
        object.__setattr__(self, "offset", q(self.offset))
        if self.sense not in _FLIP:
            raise ValueError(f"unknown constraint sense {self.sense!r}")

    def holds(self, x) -> bool:
        lhs = dot(self.normal, x)
        return {
            GE: lhs >= self.offset, LE: lhs <= self.offset, EQ: lhs == self.offset,
            GT: lhs > self.offset, LT: lhs < self.offset,
        }[self.sense]


def constraint(normal, sense, offset) -> Constraint:
    return Constraint(normal, offset, sense)


@dataclass(frozen=True)
class LinearProgram:
    """Maximize ``objective . x`` over free variables subject to constraints."""

    objective: tuple
    constraints: tuple

    def __post_init__(self):
        object.__setattr__(self, "objective", qvec(self.objective))
        cons = tuple(self.constraints)
        d = len(self.objective)
        for c in cons:
            if c.sense in (GT, LT):
                raise ValueError("strict constraints belong in lp_strict_interior")
            if len(c.normal) != d:
                raise ValueError("constraint normal has wrong length")
        object.__setattr__(self, "constraints", cons)

    @property
    def dim(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None = None
    point: tuple | None = None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


def _pivot(T, basis, r, c):
    row = T[r]
    piv = row[c]
    if piv != 1:
        row = [a / piv for a in row]
        T[r] = row
    nz = [j for j, a in enumerate(row) if a]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                for j in nz:
                    other[j] -= f * row[j]
    basis[r] = c


def _run_simplex(T, basis, ncols, allowed):
    """Maximize with Bland's rule.  Row ``T[-1]`` holds reduced costs.

    Reduced-cost convention: ``T[-1][j] < 0`` means column j improves the
    objective.  Returns False if unbounded.
    """
    m = len(T) - 1
    obj = T[-1]
    while True:
        enter = next((j for j in range(ncols) if allowed[j] and obj[j] < 0), None)
        if enter is None:
            return True
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        _pivot(T, basis, best[1], enter)
        obj = T[-1]


def lp_solve(lp: LinearProgram) -> LPResult:
    """Exact two-phase simplex (Bland's rule) over free variables."""
    d = lp.dim
    rows = []
    for c in lp.constraints:
        a, b, s = list(c.normal), c.offset, c.sense
        if b < 0:
            a, b, s = [-x for x in a], -b, _FLIP[s]
        rows.append((a, b, s))

    # columns: x+ (d), x- (d), slack/surplus per inequality, artificial per >= or ==
    n_slack = sum(1 for _, _, s in rows if s != EQ)
    n_art = sum(1 for _, _, s in rows if s != LE)
    ncols = 2 * d + n_slack + n_art
    art_start = 2 * d + n_slack
    T = []
    basis = []
    si, ai = 2 * d, art_start
    for a, b, s in rows:
        row = [Fraction(0)] * (ncols + 1)
        for j in range(d):
            row[j] = a[j]
            row[d + j] = -a[j]
        if s == LE:
            row[si] = Fraction(1)
            basis.append(si)
            si += 1
        else:
            if s == GE:
                row[si] = Fraction(-1)
                si += 1
            row[ai] = Fraction(1)
            basis.append(ai)
            ai += 1
        row[-1] = b
        T.append(row)

    # phase I: maximize -sum(artificials)
    obj = [Fraction(0)] * (ncols + 1)
    for j in range(art_start, ncols):
        obj[j] = Fraction(1)
    for i, bcol in enumerate(basis):
        if bcol >= art_start:
            obj = [o - t for o, t in zip(obj, T[i])]
    T.append(obj)
    allowed = [True] * ncols
    _run_simplex(T, basis, ncols, allowed)
    if T[-1][-1] != 0:
        return LPResult(INFEASIBLE)

    # drive zero-level artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(T) - 1:
        if basis[i] >= art_start:
            c = next((j for j in range(art_start) if T[i][j] != 0), None)
            if c is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, basis, i, c)
        i += 1

    # phase II
    allowed = [j < art_start for j in range(ncols)]
    obj = [Fraction(0)] * (ncols + 1)
    for j in range(d):
        obj[j] = -lp.objective[j]
        obj[d + j] = lp.objective[j]
    for i, bcol in enumerate(basis):
        if obj[bcol]:
            f = obj[bcol]
            obj = [o - f * t for o, t in zip(obj, T[i])]
    T[-1] = obj
    if not _run_simplex(T, basis, ncols, allowed):
        return LPResult(UNBOUNDED)

    values = [Fraction(0)] * ncols
    for i, bcol in enumerate(basis):
        values[bcol] = T[i][-1]
    x = tuple(values[j] - values[d + j] for j in range(d))
    return LPResult(OPTIMAL, dot(lp.objective, x), x)


def lp_maximize(objective, constraints) -> LPResult:
    return lp_solve(LinearProgram(tuple(objective), tuple(constraints)))


def lp_strict_interior(constraints: Sequence[Constraint], dim: int | None = None):
    """A rational point satisfying every constraint, strict ones strictly.

    Each strict constraint ``<x,v> > b`` is relaxed to ``<x,v> >= b + s`` with a
    shared slack ``0 <= s <= 1`` which is then maximized; the strict system is
    feasible exactly when the optimal slack is positive.  Returns ``None`` when
    the system has no such point.
    """
    constraints = list(constraints)
    if dim is None:
        if not constraints:
            raise ValueError("dimension required for an empty constraint list")
        dim = len(constraints[0].normal)
    strict = any(c.sense in (GT, LT) for c in constraints)
    if not strict:
        res = lp_maximize((0,) * dim, constraints)
        return res.point if res.status == OPTIMAL else None

    lifted = []
    for c in constraints:
        n = c.normal + (Fraction(0),)
        if c.sense == GT:
            lifted.append(Constraint(c.normal + (-1,), c.offset, GE))
        elif c.sense == LT:
            lifted.append(Constraint(c.normal + (1,), c.offset, LE))
        else:
            lifted.append(Constraint(n, c.offset, c.sense))
    unit = (0,) * dim + (1,)
    lifted.append(Constraint(unit, 1, LE))
    lifted.append(Constraint(unit, 0, GE))
    res = lp_maximize(unit, lifted)
    if res.status != OPTIMAL or res.value <= 0:
        return None
    return res.point[:dim]
