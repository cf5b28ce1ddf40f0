from fractions import Fraction

import pytest

from fthresh import kernel as K
from fthresh import thresholds as T
from fthresh.cones import DualPair
from fthresh.errors import OracleBudgetExceeded, UnsupportedJ
from fthresh.ideals import (frobenius_power, ideal_contains, ideal_power, make_ideal,
                            maximal_monomial_ideal)
from fthresh.oracle import (NuQuery, OracleConfig, convergence_table, is_prime, nu,
                            nu_search)

from conftest import A1, QUADRIC, ORTHANT2, ORTHANT3

ORTH = DualPair(ORTHANT2)
M = maximal_monomial_ideal(ORTH)
X2Y3 = make_ideal(ORTH, [(2, 0), (0, 3)])


def test_nu_examples():
    assert nu(NuQuery(M, M, 2, 1)) == 2
    assert nu(NuQuery(X2Y3, M, 2, 1)) == 0
    assert nu(NuQuery(X2Y3, M, 2, 2)) == 2


def test_nu_closed_form_for_maximal_ideal():
    for p, e in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1)]:
        assert nu(NuQuery(M, M, p, e)) == 2 * p ** e - 2


def _check_definition(a, J, p, e):
    res = nu_search(NuQuery(a, J, p, e))
    Jq = frobenius_power(J, p ** e)
    # the witness is a sum of nu generators of a and lies outside J^[q]
    total = (0,) * a.dim
    for g, k in zip(a.generators, res.multiplicities):
        total = K.add(total, K.scale(k, g))
    assert sum(res.multiplicities) == res.nu and total == res.witness
    assert not ideal_contains(Jq, res.witness)
    # every product of nu + 1 generators is inside
    assert all(ideal_contains(Jq, g) for g in ideal_power(a, res.nu + 1).generators)
    return res.nu


@pytest.mark.parametrize("rays, a_gens, J_gens", [
    (ORTHANT2, [(2, 0), (0, 3)], [(1, 0), (0, 1)]),
    (ORTHANT2, [(2, 1), (0, 2)], [(1, 0), (0, 2)]),
    (A1, [(1, 0), (0, 1)], None),
    (QUADRIC, None, None),
    (ORTHANT3, [(1, 1, 0)], [(1, 1, 0), (2, 0, 0), (0, 2, 0), (0, 0, 1)]),
])
def test_nu_matches_definition(rays, a_gens, J_gens):
    dp = DualPair(rays)
    m = maximal_monomial_ideal(dp)
    a = make_ideal(dp, a_gens) if a_gens else m
    J = make_ideal(dp, J_gens) if J_gens else m
    for p, e in [(2, 1), (2, 2), (3, 1)]:
        _check_definition(a, J, p, e)


def test_ratios_monotone_and_bounded():
    for a, J, p, e_max in [(M, M, 2, 4), (X2Y3, M, 2, 5), (X2Y3, M, 3, 3)]:
        table = convergence_table(a, J, p, e_max)
        ratios = [r.ratio for r in table.rows]
        assert all(x <= y for x, y in zip(ratios, ratios[1:]))
        assert all(x <= table.limit for x in ratios)
        gaps = [table.limit - x for x in ratios]
        assert all(x >= y for x, y in zip(gaps, gaps[1:]))


def test_convergence_examples():
    table = convergence_table(M, M, 2, 4)
    assert [r.ratio for r in table.rows] == [1, Fraction(3, 2), Fraction(7, 4), Fraction(15, 8)]
    assert table.limit == 2
    table = convergence_table(X2Y3, M, 2, 2)
    assert [r.ratio for r in table.rows] == [0, Fraction(1, 2)] and table.limit == Fraction(5, 6)
    dp = DualPair(QUADRIC)
    m = maximal_monomial_ideal(dp)
    table = convergence_table(m, m, 2, 3)
    assert table.limit == 2 and not table.partial
    ratios = [r.ratio for r in table.rows]
    assert ratios == sorted(ratios) and all(x <= 2 for x in ratios)


def test_junction_instance_converges_to_cell_value():
    dp = DualPair(ORTHANT3)
    J = make_ideal(dp, [(1, 1, 0), (2, 0, 0), (0, 2, 0), (0, 0, 1)])
    a = make_ideal(dp, [(1, 1, 0)])
    table = convergence_table(a, J, 3, 3)
    assert [r.ratio for r in table.rows] == [Fraction(2, 3), Fraction(8, 9), Fraction(26, 27)]
    assert table.limit == T.f_threshold(dp, a, J).value == 1


def test_budget():
    with pytest.raises(OracleBudgetExceeded):
        nu(NuQuery(M, M, 3, 3), OracleConfig(budget=10))
    table = convergence_table(M, M, 2, 4, OracleConfig(budget=40))
    assert table.partial and table.rows[-1].nu is None
    assert all(r.nu is not None for r in table.rows[:-1])


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("FTHRESH_BUDGET", "123")
    assert OracleConfig.from_env().budget == 123
    monkeypatch.delenv("FTHRESH_BUDGET")
    assert OracleConfig.from_env().budget == 10**6


def test_query_validation():
    with pytest.raises(ValueError):
        nu(NuQuery(M, M, 4, 1))
    with pytest.raises(ValueError):
        nu(NuQuery(M, M, 2, 0))
    with pytest.raises(ValueError):
        nu(NuQuery(M, M, 3, 5))  # 243 beyond the default bound
    with pytest.raises(UnsupportedJ):
        nu(NuQuery(M, make_ideal(ORTH, [(1, 0)]), 2, 1))
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
