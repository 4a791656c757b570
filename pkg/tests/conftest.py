import random

import pytest
from hypothesis import settings

from mldsl.polyring import GF, QQ, PolyRing

settings.register_profile("ci", derandomize=True, deadline=None, max_examples=100)
settings.load_profile("ci")


@pytest.fixture
def xyz():
    return PolyRing(["x", "y", "z"], QQ)


@pytest.fixture
def xyz_fp():
    return PolyRing(["x", "y", "z"], GF())


def random_poly(rng: random.Random, ring, nterms=3, maxdeg=2, coeff=5, homogeneous=None):
    """Random sparse polynomial; ``homogeneous`` fixes the total degree."""
    terms = {}
    n = ring.nvars
    for _ in range(nterms):
        if homogeneous is None:
            d = rng.randint(0, maxdeg)
        else:
            d = homogeneous
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        c = rng.randint(-coeff, coeff)
        if c:
            terms[tuple(e)] = terms.get(tuple(e), 0) + c
    from mldsl.polyring import Polynomial

    return Polynomial(ring, terms)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(RESULTS.values()):
        terminalreporter.write_line(line)
