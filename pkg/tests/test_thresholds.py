import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fthresh import kernel as K
from fthresh import thresholds as T
from fthresh.cones import DualPair
from fthresh.errors import NotGorenstein, SimplicialRequired, UnsupportedJ
from fthresh.ideals import (ideal_contains, is_m_primary, is_subideal, make_ideal,
                            maximal_monomial_ideal, newton_polyhedron, unit_ideal)

from conftest import (A1, QUADRIC, NON_GOR, ORTHANT2, ORTHANT3, TEST_CONES, lattice_points,
                      r_gorenstein, random_m_primary, random_simplicial)

ORTH = DualPair(ORTHANT2)
X2Y3 = make_ideal(ORTH, [(2, 0), (0, 3)])


def assert_witness(dp, I, tv):
    P = newton_polyhedron(I)
    assert dp.in_dual(tv.witness)
    assert T.lambda_value(P, tv.witness) == tv.value


# ------------------------------------------------------------------ lambda

def test_lambda_examples():
    P = newton_polyhedron(X2Y3)
    assert T.lambda_value(P, (1, 1)) == Fraction(5, 6)
    assert T.lambda_value(P, (0, 0)) == 0
    for r in (2, 3, 5):
        dp = DualPair(r_gorenstein(r))
        assert T.lambda_value(newton_polyhedron(make_ideal(dp, [(r, 0, 1)])), (r, 0, 1)) == 1
    with pytest.raises(ValueError):
        T.lambda_value(P, (-1, 0))


@st.composite
def ideal_and_points(draw):
    name = draw(st.sampled_from(["orthant2", "A1", "non_gorenstein", "quadric", "rgor3"]))
    dp = DualPair(TEST_CONES[name])
    pts = lattice_points(dp, 3)
    I = make_ideal(dp, draw(st.lists(st.sampled_from(pts), min_size=1, max_size=3)))
    w = draw(st.sampled_from(pts))
    extra = [draw(st.sampled_from(pts)) for _ in range(draw(st.integers(0, 2)))]
    return I, w, extra


@given(ideal_and_points())
def test_lambda_monotone(data):
    I, w, extra = data
    w2 = w
    for e in extra:
        w2 = K.add(w2, e)
    P = newton_polyhedron(I)
    # w2 - w is in sigma_dual, so every pairing of w2 dominates that of w
    assert T.lambda_value(P, w) <= T.lambda_value(P, w2)


@given(ideal_and_points(), st.fractions(0, 5, max_denominator=7))
def test_lambda_homogeneous(data, k):
    I, w, _ = data
    P = newton_polyhedron(I)
    assert T.lambda_value(P, K.scale(k, w)) == k * T.lambda_value(P, w)


# --------------------------------------------------------------- fpt and mu

def test_fpt_examples():
    tv = T.fpt(ORTH, X2Y3)
    assert tv.value == Fraction(5, 6) and tv.witness == (1, 1)
    dp = DualPair(QUADRIC)
    tv = T.fpt(dp, maximal_monomial_ideal(dp))
    assert tv.value == 2 and tv.witness == (1, 1, 2)
    for r in (2, 3, 5):
        dp = DualPair(r_gorenstein(r))
        tv = T.fpt(dp, make_ideal(dp, [(r, 0, 1)]))
        assert tv.value == Fraction(1, r) and tv.witness == (1, 0, Fraction(1, r))


def test_mu_examples():
    assert T.mu_value(ORTH, X2Y3, (0, 0)) == Fraction(5, 6)
    assert T.mu_value(ORTH, X2Y3, (1, 0)) == Fraction(4, 3)
    assert T.mu_value(ORTH, X2Y3, (0, 1)) == Fraction(7, 6)


# -------------------------------------------------------------- F-threshold

def test_f_threshold_examples():
    m = maximal_monomial_ideal(ORTH)
    tv = T.f_threshold(ORTH, m, m)
    assert tv.value == 2 and tv.witness == (1, 1) and tv.method == T.CELLS
    dp = DualPair(QUADRIC)
    m = maximal_monomial_ideal(dp)
    tv = T.f_threshold(dp, m, m)
    assert tv.value == 2 and tv.witness == (1, 1, 2)
    for r in (2, 3, 5):
        dp = DualPair(r_gorenstein(r))
        a = make_ideal(dp, [(r, 0, 1)])
        assert T.f_threshold(dp, a).value == Fraction(1, r)


def test_candidate_examples():
    m = maximal_monomial_ideal(ORTH)
    assert (1, 1) in T.candidate_points(ORTH, m)
    assert T.f_threshold_candidates(ORTH, m, m).value == 2
    tv = T.f_threshold_candidates(ORTH, X2Y3, m)
    assert tv.value == Fraction(5, 6) and tv.witness == (1, 1)
    with pytest.raises(SimplicialRequired):
        dp = DualPair(QUADRIC)
        T.f_threshold_candidates(dp, maximal_monomial_ideal(dp))


def test_unsupported_pairs():
    with pytest.raises(UnsupportedJ):
        T.f_threshold(ORTH, X2Y3, make_ideal(ORTH, [(1, 0)]))
    dp = DualPair(ORTHANT3)
    J = make_ideal(dp, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert T.f_threshold(dp, J, J).value == 3


def test_junction_candidate_regression():
    # J = (xy, x^2, y^2, z): the literal filter "u not in b + Int(sigma_dual)"
    # keeps (2,2,0) on the face z = 0, although a neighbourhood of it in
    # sigma_dual lies inside xy + sigma_dual
    dp = DualPair(ORTHANT3)
    J = make_ideal(dp, [(1, 1, 0), (2, 0, 0), (0, 2, 0), (0, 0, 1)])
    a = make_ideal(dp, [(1, 1, 0)])
    assert T.f_threshold(dp, a, J).value == 1
    assert T.f_threshold_candidates(dp, a, J).value == 1
    assert (2, 2, 0) in T.candidate_points(dp, J, relative=False)
    assert (2, 2, 0) not in T.candidate_points(dp, J)
    assert T.f_threshold_candidates(dp, a, J, relative=False).value == 2


def test_cells_match_candidates_on_random_instances():
    rng = random.Random(7)
    for _ in range(15):
        dp = random_simplicial(rng, rng.choice([2, 3]))
        pts = lattice_points(dp, 3)
        a = random_m_primary(rng, dp, pts, rng.randint(1, 3))
        J = random_m_primary(rng, dp, pts, rng.randint(1, 3))
        cells = T.f_threshold(dp, a, J)
        cands = T.f_threshold_candidates(dp, a, J)
        assert cells.value == cands.value
        assert_witness(dp, a, cells)
        assert_witness(dp, a, cands)


@pytest.mark.parametrize("name", sorted(TEST_CONES))
def test_fpt_below_f_threshold_of_m(name):
    dp = DualPair(TEST_CONES[name])
    rng = random.Random(name)
    pts = lattice_points(dp, 2)
    for _ in range(3):
        a = random_m_primary(rng, dp, pts, 2)
        assert T.fpt(dp, a).value <= T.f_threshold(dp, a).value


# -------------------------------------------------------------- test ideals

def test_test_ideal_contains_examples():
    assert not T.test_ideal_contains(ORTH, X2Y3, Fraction(5, 6), (0, 0))
    assert T.test_ideal_contains(ORTH, X2Y3, Fraction(5, 6), (1, 0))
    for name in ("A1", "quadric", "rgor3"):
        dp = DualPair(TEST_CONES[name])
        m = maximal_monomial_ideal(dp)
        c = T.fpt(dp, m).value
        assert T.test_ideal_contains(dp, m, c - Fraction(1, 100), (0,) * dp.dim)
        assert not T.test_ideal_contains(dp, m, c, (0,) * dp.dim)


def test_test_ideal_generator_examples():
    assert set(T.test_ideal_generators(ORTH, X2Y3, Fraction(5, 6)).generators) == {(1, 0), (0, 1)}
    assert set(T.test_ideal_generators(ORTH, X2Y3, Fraction(7, 6)).generators) == {(1, 0), (0, 2)}
    assert T.test_ideal_generators(ORTH, X2Y3, Fraction(1, 2)) == unit_ideal(ORTH)


def test_test_ideal_rejects_nonpositive_exponent():
    with pytest.raises(ValueError):
        T.test_ideal_generators(ORTH, X2Y3, 0)


def _howald(I, c, u):
    """``u + (1, ..., 1)`` in the interior of ``c P``."""
    shifted = K.add(u, (1,) * len(u))
    return all(K.dot(shifted, n) > c * b for n, b in newton_polyhedron(I).facets)


@pytest.mark.parametrize("gens", [[(2, 0), (0, 3)], [(1, 0), (0, 1)], [(3, 0), (1, 1), (0, 4)],
                                  [(2, 1), (0, 2)]])
@pytest.mark.parametrize("c", [Fraction(1, 3), Fraction(5, 6), Fraction(1), Fraction(7, 6),
                               Fraction(3, 2), Fraction(11, 5)])
def test_orthant_matches_howald_rule(gens, c):
    I = make_ideal(ORTH, gens)
    tau = T.test_ideal_generators(ORTH, I, c)
    for u in itertools.product(range(7), repeat=2):
        assert T.test_ideal_contains(ORTH, I, c, u) == _howald(I, c, u)
        assert ideal_contains(tau, u) == _howald(I, c, u)


def test_test_ideal_inside_j_at_threshold_on_orthant():
    rng = random.Random(11)
    for d in (2, 3):
        dp = DualPair(ORTHANT2 if d == 2 else ORTHANT3)
        pts = lattice_points(dp, 2)
        for _ in range(4):
            a = random_m_primary(rng, dp, pts, 2)
            J = random_m_primary(rng, dp, pts, 2)
            c = T.f_threshold(dp, a, J).value
            assert is_subideal(T.test_ideal_generators(dp, a, c), J)


# ---------------------------------------------------------------- jumping

def test_jumping_examples():
    chain = T.jumping_coefficients(ORTH, X2Y3, 3)
    assert chain.coefficients == (Fraction(5, 6), Fraction(7, 6), Fraction(4, 3))
    assert set(chain.ideals[0].generators) == {(1, 0), (0, 1)}
    assert set(chain.ideals[1].generators) == {(1, 0), (0, 2)}
    for r in (2, 3):
        dp = DualPair(r_gorenstein(r))
        a = make_ideal(dp, [(r, 0, 1)])
        assert T.jumping_coefficients(dp, a, 1).coefficients == (Fraction(1, r),)


def _check_chain(dp, I, chain):
    eps = Fraction(1, 1000)
    prev = unit_ideal(dp)
    last = Fraction(0)
    for c, tau, tv in zip(chain.coefficients, chain.ideals, chain.witnesses):
        assert c > last
        assert is_subideal(tau, prev) and not is_subideal(prev, tau)
        assert_witness(dp, I, tv)
        # just below c the test ideal is still the previous one
        for g in prev.generators:
            assert T.test_ideal_contains(dp, I, c - eps, g)
        assert any(not T.test_ideal_contains(dp, I, c, g) for g in prev.generators)
        prev, last = tau, c


@pytest.mark.parametrize("name", ["orthant2", "A1", "A4", "non_gorenstein"])
def test_jumping_chain_strict(name):
    dp = DualPair(TEST_CONES[name])
    m = maximal_monomial_ideal(dp)
    chain = T.jumping_coefficients(dp, m, 3)
    assert chain.coefficients[0] == T.fpt(dp, m).value
    _check_chain(dp, m, chain)


def test_jumping_count_validated():
    with pytest.raises(ValueError):
        T.jumping_coefficients(ORTH, X2Y3, 0)


# ------------------------------------------------------------ applications

def test_gorenstein_witness_examples():
    assert T.gorenstein_witness_ideal(DualPair(A1)).generators == ((1, 0),)
    assert T.gorenstein_witness_ideal(DualPair(QUADRIC)).generators == ((1, 1, 2),)
    assert T.gorenstein_witness_ideal(DualPair(r_gorenstein(1))).generators == ((1, 0, 1),)
    with pytest.raises(NotGorenstein):
        T.gorenstein_witness_ideal(DualPair(r_gorenstein(2)))


@pytest.mark.parametrize("name", ["orthant2", "A1", "A4", "quadric", "orthant3"])
def test_gorenstein_witness_threshold_is_one(name):
    dp = DualPair(TEST_CONES[name])
    a = T.gorenstein_witness_ideal(dp)
    assert T.fpt(dp, a).value == 1
    assert T.f_threshold(dp, a).value == 1


def test_regularity_examples():
    m = maximal_monomial_ideal(ORTH)
    rep = T.regularity_probe(ORTH, m)
    assert rep.smooth and rep.fpt == 2 and rep.fthreshold == 2 and rep.equal
    dp = DualPair(A1)
    rep = T.regularity_probe(dp, maximal_monomial_ideal(dp))
    assert not rep.smooth and rep.fpt < rep.fthreshold and not rep.equal
    dp = DualPair(NON_GOR)
    rng = random.Random(3)
    for _ in range(5):
        a = random_m_primary(rng, dp, lattice_points(dp, 3), 2)
        assert not T.regularity_probe(dp, a).equal


def test_regularity_errors():
    dp = DualPair(QUADRIC)
    with pytest.raises(SimplicialRequired):
        T.regularity_probe(dp, maximal_monomial_ideal(dp))
    with pytest.raises(ValueError):
        T.regularity_probe(ORTH, make_ideal(ORTH, [(1, 0)]))
    assert not is_m_primary(make_ideal(ORTH, [(1, 0)]))
