import os

import pytest

from suspforge import GF, QQ, ZZ, PolynomialRing
from suspforge.groebner import Ideal

# Every randomized test draws from this seed; override to explore.
SEED = int(os.environ.get("SUSPFORGE_TEST_SEED", "20260810"))


@pytest.fixture
def qq_xy():
    return PolynomialRing(QQ, ["x", "y"])


@pytest.fixture
def qq_xyz():
    return PolynomialRing(QQ, ["x", "y", "z"])


@pytest.fixture
def qq_z():
    return PolynomialRing(QQ, ["z"])


@pytest.fixture
def zz_t():
    return PolynomialRing(ZZ, ["t"])


def ideal(ring, *exprs):
    return Ideal(ring, [ring.parse(e) for e in exprs])
