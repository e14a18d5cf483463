import pytest

from suspforge import GF, QQ, ZZ, PolynomialRing
from suspforge import _kernels_py
from suspforge.constructions import monomial_family_spec, quasi_affine_contractible
from suspforge.counting import (
    BACKEND,
    BudgetExceededError,
    compile_system,
    count_points_bruteforce,
)
from suspforge.groebner import Ideal
from suspforge.schemes import AffinePresentation, contains_point

from conftest import ideal

try:
    from suspforge import _speedups
except ImportError:
    _speedups = None


def pres(ring, *exprs):
    return AffinePresentation(ring, ideal(ring, *exprs))


def test_quadric_count_over_f2():
    ring = PolynomialRing(ZZ, ["x", "y", "z"])
    assert count_points_bruteforce(pres(ring, "x*y - z*(1-z)"), 2) == 6


def test_empty_and_full_counts(qq_xy):
    ring = PolynomialRing(ZZ, ["a", "b"])
    assert count_points_bruteforce(pres(ring, "1"), 3) == 0
    assert count_points_bruteforce(
        AffinePresentation(ring, Ideal(ring, [])), 3
    ) == 9


def test_count_matches_contains_point_enumeration():
    """Independent cross-check: enumerate tuples with contains_point."""
    from itertools import product

    ring = PolynomialRing(GF(3), ["x", "y"])
    X = pres(ring, "x^2 + y^2 - 1")
    expected = sum(
        contains_point(X, dict(zip(ring.variables, pt)))
        for pt in product(range(3), repeat=2)
    )
    assert count_points_bruteforce(X, 3) == expected


def test_quasi_affine_count_subtracts_removed():
    spec = monomial_family_spec((1, 1), (0, 1))
    X1 = quasi_affine_contractible(spec, 1)
    ambient_count = count_points_bruteforce(X1.ambient, 2)
    removed_pres = AffinePresentation(X1.ring, X1.removed)
    removed_count = count_points_bruteforce(removed_pres, 2)
    assert count_points_bruteforce(X1, 2) == ambient_count - removed_count == 16


def test_budget_enforced():
    ring = PolynomialRing(ZZ, ["a", "b", "c"])
    with pytest.raises(BudgetExceededError):
        count_points_bruteforce(pres(ring, "a"), 5, budget=100)


def test_rational_coefficients_reduce_when_possible():
    from fractions import Fraction

    ring = PolynomialRing(QQ, ["x"])
    X = AffinePresentation(
        ring, Ideal(ring, [ring.var("x") - ring.const(Fraction(1, 2))])
    )
    assert count_points_bruteforce(X, 3) == 1  # x = 2 solves 2*x = 1 mod 3
    from suspforge.rings import CoefficientRingError

    with pytest.raises(CoefficientRingError):
        count_points_bruteforce(X, 2)  # denominator 2 dies mod 2


def test_prime_field_presentation_must_match_prime():
    ring = PolynomialRing(GF(3), ["x"])
    X = pres(ring, "x^2 - 1")
    assert count_points_bruteforce(X, 3) == 2
    from suspforge.rings import CoefficientRingError

    with pytest.raises(CoefficientRingError):
        count_points_bruteforce(X, 5)


def test_zero_variable_ring_counts():
    ring = PolynomialRing(ZZ, [])
    assert count_points_bruteforce(AffinePresentation(ring, Ideal(ring, [])), 7) == 1
    assert count_points_bruteforce(pres(ring, "1"), 7) == 0


@pytest.mark.skipif(_speedups is None, reason="compiled kernel not built")
def test_backends_agree():
    cases = [
        (2, 3, [((1,), (1, 1, 0)), ((1, 1), (0, 0, 2, 0, 0, 1))], None),
        (5, 2, [((3, 2), (2, 1, 0, 3))], None),
        (3, 4, [((1, 2), (1, 0, 0, 0, 0, 1, 1, 0))], [((1,), (0, 0, 0, 1))]),
        (7, 1, [], None),
        (2, 0, [((1,), ())], None),
    ]
    for p, nvars, ambient, removed in cases:
        assert _speedups.count_points(
            p, nvars, ambient, removed
        ) == _kernels_py.count_points(p, nvars, ambient, removed)


def test_compile_system_layout():
    ring = PolynomialRing(GF(5), ["x", "y"])
    f = ring.parse("2*x^2*y + 3")
    [(coeffs, exps)] = compile_system([f], 5)
    assert len(coeffs) * 2 == len(exps)
    assert set(coeffs) == {2, 3}


def test_backend_name_exposed():
    assert BACKEND in ("pure", "compiled")
