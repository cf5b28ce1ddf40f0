import itertools
import random

import pytest
from hypothesis import HealthCheck, settings

from fthresh.cones import DualPair
from fthresh.ideals import is_m_primary, make_ideal

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

ORTHANT2 = [(1, 0), (0, 1)]
ORTHANT3 = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
A1 = [(1, 0), (1, 2)]
A4 = [(1, 0), (1, 5)]
NON_GOR = [(1, 0), (2, 3)]
QUADRIC = [(1, 0, 0), (0, 1, 0), (-1, 0, 1), (0, -1, 1)]


def r_gorenstein(r):
    return [(1, 0, 0), (1, 1, 0), (0, 1, r)]


TEST_CONES = {
    "orthant2": ORTHANT2, "orthant3": ORTHANT3, "A1": A1, "A4": A4,
    "non_gorenstein": NON_GOR, "quadric": QUADRIC,
    "rgor2": r_gorenstein(2), "rgor3": r_gorenstein(3), "rgor5": r_gorenstein(5),
}


@pytest.fixture(scope="session")
def cones():
    return {name: DualPair(rays) for name, rays in TEST_CONES.items()}


@pytest.fixture(scope="session")
def orthant(cones):
    return cones["orthant2"]


# ------------------------------------------------------ random instances

def lattice_points(dp, bound):
    return [p for p in itertools.product(range(-bound, bound + 1), repeat=dp.dim)
            if any(p) and dp.in_dual(p)]


def random_simplicial(rng, d, entries=(-1, 2)):
    while True:
        rays = [tuple(rng.randint(*entries) for _ in range(d)) for _ in range(d)]
        try:
            dp = DualPair(rays)
        except Exception:
            continue
        if len(dp.v) == d:
            return dp


def random_m_primary(rng, dp, pts, k):
    """``k`` random generators from ``pts`` topped up with ray multiples."""
    gens = rng.sample(pts, min(k, len(pts)))
    for u in dp.u:
        enters = any(all(x >= y for x, y in zip(dp.pairings(tuple(n * a for a in u)), dp.pairings(g)))
                     for g in gens for n in range(1, 5))
        if not enters:
            k = rng.randint(1, 2)
            gens.append(tuple(k * a for a in u))
    ideal = make_ideal(dp, gens)
    assert is_m_primary(ideal)
    return ideal


@pytest.fixture
def rng():
    return random.Random(20261016)


# ------------------------------------------------------ acceptance report

ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[n])
