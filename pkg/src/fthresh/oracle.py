"""Brute-force ``nu_a^J(q) = max{r : a^r not in J^[q]}`` on exponent vectors.

Monomial ideals only need semigroup arithmetic: ``a^r`` is generated by the
sums of ``r`` generators, and ``X^s`` lies in ``J^[q]`` iff ``s`` lies in
``Q(J^[q])``.  No polynomial arithmetic over a finite field is involved.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from . import kernel as K
from .errors import OracleBudgetExceeded, UnsupportedJ
from .ideals import MonomialIdeal, frobenius_power, ideal_contains, in_radical


@dataclass(frozen=True)
class OracleConfig:
    budget: int = 10**6
    max_q: int = 81

    @classmethod
    def from_env(cls) -> "OracleConfig":
        raw = os.environ.get("FTHRESH_BUDGET")
        return cls(budget=int(raw)) if raw else cls()


@dataclass(frozen=True)
class NuQuery:
    ideal_a: MonomialIdeal
    ideal_j: MonomialIdeal
    p: int
    e: int

    @property
    def q(self) -> int:
        return self.p ** self.e


@dataclass(frozen=True)
class NuResult:
    nu: int
    witness: tuple            # exponent sum of nu generators outside J^[q]
    multiplicities: tuple     # how often each generator of a was used
    states: int


@dataclass(frozen=True)
class ConvergenceRow:
    e: int
    q: int
    nu: int | None
    ratio: Fraction | None


@dataclass(frozen=True)
class ConvergenceTable:
    rows: tuple
    limit: Fraction
    partial: bool = False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def validate(query: NuQuery, config: OracleConfig = OracleConfig()):
    if not is_prime(query.p):
        raise ValueError(f"{query.p} is not prime")
    if query.e < 1:
        raise ValueError("e must be positive")
    if query.q > config.max_q:
        raise ValueError(f"p^e = {query.q} exceeds the configured bound {config.max_q}")
    if not in_radical(query.ideal_a, query.ideal_j):
        raise UnsupportedJ("UnsupportedJ: a is not contained in the radical of J")


def nu_search(query: NuQuery, config: OracleConfig = OracleConfig()) -> NuResult:
    """Level-by-level frontier search over sums of generators of ``a``.

    Sums already in ``J^[q]`` are never extended (adding semigroup elements
    keeps them inside).  Within a level, a sum dominating another surviving
    sum is dropped too: every extension of the larger one dominates the same
    extension of the smaller one, so the smaller survives at least as long.
    """
    validate(query, config)
    dp = query.ideal_a.dp
    gens = query.ideal_a.generators
    Jq = frobenius_power(query.ideal_j, query.q)
    zero = (0,) * dp.dim
    if ideal_contains(Jq, zero):
        return NuResult(0, zero, (0,) * len(gens), 1)

    frontier = {zero: (0,) * len(gens)}
    states = 1
    level = 0
    while True:
        nxt: dict = {}
        for s, mult in frontier.items():
            for k, g in enumerate(gens):
                t = K.add(s, g)
                if t in nxt:
                    continue
                states += 1
                if states > config.budget:
                    raise OracleBudgetExceeded(
                        f"OracleBudgetExceeded: more than {config.budget} frontier states")
                if not ideal_contains(Jq, t):
                    m = list(mult)
                    m[k] += 1
                    nxt[t] = tuple(m)
        if not nxt:
            witness, mult = min(frontier.items())
            return NuResult(level, witness, mult, states)
        keys = sorted(nxt, key=lambda s: (sum(dp.pairings(s)), s))
        kept = []
        for s in keys:
            if not any(dp.in_dual(K.sub(s, r)) for r in kept):
                kept.append(s)
        frontier = {s: nxt[s] for s in kept}
        level += 1


def nu(query: NuQuery, config: OracleConfig = OracleConfig()) -> int:
    return nu_search(query, config).nu


def convergence_table(ideal_a: MonomialIdeal, ideal_j: MonomialIdeal, p: int, e_max: int,
                      config: OracleConfig = OracleConfig()) -> ConvergenceTable:
    """Rows ``(e, q, nu, nu/q)`` for ``e = 1..e_max`` next to the exact limit."""
    from .thresholds import f_threshold

    limit = f_threshold(ideal_a.dp, ideal_a, ideal_j).value
    rows = []
    partial = False
    for e in range(1, e_max + 1):
        query = NuQuery(ideal_a, ideal_j, p, e)
        try:
            n = nu(query, config)
        except OracleBudgetExceeded:
            rows.append(ConvergenceRow(e, p ** e, None, None))
            partial = True
            break
        ratio = Fraction(n, p ** e)
        if ratio > limit:
            raise AssertionError(f"ratio {ratio} exceeds the F-threshold {limit} at e={e}")
        rows.append(ConvergenceRow(e, p ** e, n, ratio))
    return ConvergenceTable(tuple(rows), limit, partial)
