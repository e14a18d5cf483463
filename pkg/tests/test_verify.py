import pytest

from suspforge import GF, QQ, ZZ, PolynomialRing
from suspforge.constructions import (
    ConstructionError,
    FamilySpec,
    builtin_seeds,
    danielewski_family,
    iterated_suspension,
    monomial_family_spec,
    parameterized_deformation,
    suspension_model,
)
from suspforge.counting import count_points_bruteforce
from suspforge.groebner import Ideal
from suspforge.verify import (
    CheckResult,
    degree3_disc_obstruction,
    discriminant_unit_check,
    predicted_count_family,
    predicted_count_suspension,
    verify_family,
    verify_generic_fiber,
    verify_zero_fiber,
)

from conftest import ideal


def spec_over_z(gens, roots, variables=("x",)):
    ring = PolynomialRing(ZZ, list(variables))
    return FamilySpec(
        tuple(ring.parse(g) for g in gens),
        tuple(ring.const(a) for a in roots),
    )


# -- count formula validation against the enumerator (the authority) ---------------


FAMILY_INSTANCES = [
    # (gens, roots, variables, prime, frozen expected count)
    (("x",), (0, 1), ("x",), 2, 6),
    (("x",), (0, 1), ("x",), 3, 12),
    (("x",), (0, 1), ("x",), 5, 30),
    (("x^2",), (0, 1), ("x",), 2, 6),
    (("x1", "x2"), (0, 1), ("x1", "x2"), 2, 20),
    (("x1", "x2"), (0, 1), ("x1", "x2"), 3, 90),
    (("x",), (0, 1, 2), ("x",), 5, 35),
]


@pytest.mark.parametrize("gens,roots,variables,p,expected", FAMILY_INSTANCES)
def test_family_count_formula_validated(gens, roots, variables, p, expected):
    spec = spec_over_z(gens, roots, variables)
    brute = count_points_bruteforce(danielewski_family(spec), p)
    predicted = predicted_count_family(spec, p)
    assert brute == predicted == expected


def test_family_count_single_root_is_affine_space():
    spec = spec_over_z(("x",), (0,))
    for p in (2, 3):
        assert predicted_count_family(spec, p) == p**2
        assert count_points_bruteforce(danielewski_family(spec), p) == p**2


def test_predicted_count_preconditions():
    bad_roots = spec_over_z(("x",), (0, 1, 2))
    with pytest.raises(ConstructionError):
        predicted_count_family(bad_roots, 2)  # roots collide mod 2
    not_smooth = spec_over_z(("x",), (0, 0))
    with pytest.raises(ConstructionError):
        predicted_count_family(not_smooth, 3)


SUSPENSION_EXPECTED = {
    ("S0", 2): 6,
    ("S0", 3): 12,
    ("S0", 5): 30,
    ("Gm", 2): 6,
    ("Gm", 3): 24,
    ("Jouanolou_A1_doubled", 2): 20,
    ("Jouanolou_A1_doubled", 3): 90,
}


def test_suspension_count_identity():
    seeds = builtin_seeds()
    for (name, p), expected in SUSPENSION_EXPECTED.items():
        D = suspension_model(seeds[name])
        brute = count_points_bruteforce(D.space, p)
        assert brute == predicted_count_suspension(D, p) == expected


# -- fiber checks ---------------------------------------------------------------------


def test_fiber_checks_on_all_seed_suspensions():
    for seed in builtin_seeds().values():
        D = suspension_model(seed)
        assert verify_generic_fiber(D, 1).passed()
        assert verify_zero_fiber(D).passed()


def test_fiber_checks_second_suspension():
    # an iterated result has several parameter directions; the single-step
    # checks apply to each suspension step individually
    D2 = iterated_suspension(builtin_seeds()["S0"], 2)
    with pytest.raises(ConstructionError):
        verify_generic_fiber(D2, 1)
    last = suspension_model(
        iterated_suspension(builtin_seeds()["S0"], 1).space, step=2
    )
    assert verify_generic_fiber(last, 1).passed()
    assert verify_zero_fiber(last).passed()


def test_generic_fiber_rejects_zero_unit():
    D = suspension_model(builtin_seeds()["S0"])
    with pytest.raises(ConstructionError):
        verify_generic_fiber(D, 0)


def test_zero_fiber_skipped_for_graph_case():
    ring = PolynomialRing(QQ, ["x"])
    D = parameterized_deformation(ideal(ring, "x^2"), ring.one)
    assert verify_zero_fiber(D).status == "skipped"
    with pytest.raises(ConstructionError):
        verify_generic_fiber(D, 1)


def test_generic_fiber_nontrivial_unit():
    D = suspension_model(builtin_seeds()["Gm"])
    assert verify_generic_fiber(D, 7).passed()


# -- discriminant checks -----------------------------------------------------------------


def test_discriminant_unit_check_cases():
    Rz = PolynomialRing(ZZ, ["z"])
    assert discriminant_unit_check(Rz.parse("z*(1-z)"), ZZ).passed()
    cubic = Rz.parse("z*(z-1)*(z-2)")
    assert not discriminant_unit_check(cubic, ZZ).passed()
    assert discriminant_unit_check(cubic, GF(3)).passed()
    assert not discriminant_unit_check(cubic, GF(2)).passed()
    assert not discriminant_unit_check(Rz.parse("z^2"), QQ).passed()


def test_degree3_obstruction_small_bounds():
    r2 = degree3_disc_obstruction(2)
    assert r2.passed() and "10 root triples" in r2.detail
    r3 = degree3_disc_obstruction(3)
    assert r3.passed() and "35 root triples" in r3.detail
    with pytest.raises(ValueError):
        degree3_disc_obstruction(1)


def test_degree3_obstruction_every_bound_to_ten():
    for bound in range(2, 11):
        assert degree3_disc_obstruction(bound).passed()


# -- family orchestration ----------------------------------------------------------------


def test_verify_family_passing():
    report = verify_family(spec_over_z(("x",), (0, 1)), primes=(2, 3))
    assert report.overall == "pass"
    assert [(e.prime, e.brute_force, e.predicted) for e in report.counts] == [
        (2, 6, 6),
        (3, 12, 12),
    ]
    assert report.check("smooth_iff_etale@2").passed()


def test_verify_family_bad_reduction_still_agrees():
    report = verify_family(spec_over_z(("x",), (0, 1, 2)), primes=(2,))
    assert report.overall == "fail"
    assert report.check("etale@2").status == "fail"
    assert report.check("smooth@2").status == "fail"
    assert report.check("smooth_iff_etale@2").passed()
    assert report.check("count@2").status == "skipped"
    # characteristic zero is untouched by the bad prime
    assert report.check("smooth@0").passed()


def test_verify_family_counts_complements():
    report = verify_family(monomial_family_spec((1, 1), (0, 1)), primes=(2,))
    assert report.overall == "pass"
    assert report.check("count_x1@2").passed()
    assert report.check("count_x2@2").passed()


def test_verify_family_prime_field_spec():
    ring = PolynomialRing(GF(5), ["x"])
    spec = FamilySpec((ring.var("x"),), (ring.const(0), ring.const(1)))
    report = verify_family(spec)
    assert report.overall == "pass"
    assert {c.name for c in report.checks} == {
        "ci@5",
        "etale@5",
        "smooth@5",
        "smooth_iff_etale@5",
        "count@5",
    }


def test_verify_family_budget_skips_counts():
    report = verify_family(
        monomial_family_spec((1, 1), (0, 1)), primes=(5,), budget=10
    )
    assert report.check("count@5").status == "skipped"
    assert report.overall == "pass"


def test_report_json_shape():
    report = verify_family(spec_over_z(("x",), (0, 1)), primes=(2,))
    doc = report.to_json_dict()
    assert doc["overall"] == "pass"
    assert {c["name"] for c in doc["checks"]} >= {"ci@0", "etale@2"}
    assert doc["counts"][0]["brute_force"] == doc["counts"][0]["predicted"]
