import pytest

from suspforge import GF, QQ, ZZ, PolynomialRing
from suspforge.constructions import (
    ConstructionError,
    FamilySpec,
    builtin_seeds,
    danielewski_family,
    iterated_suspension,
    monomial_family,
    monomial_family_spec,
    parameterized_deformation,
    quasi_affine_contractible,
    suspension_model,
)
from suspforge.groebner import Ideal, ideal_membership
from suspforge.polynomials import poly_from_roots, transport
from suspforge.schemes import (
    AffinePresentation,
    contains_point,
    is_smooth_over_field,
)

from conftest import ideal


def test_builtin_seeds():
    seeds = builtin_seeds()
    assert set(seeds) == {"S0", "Gm", "Jouanolou_A1_doubled"}
    s0 = seeds["S0"]
    assert s0.ideal == ideal(s0.ring, "t - t^2")
    assert s0.basepoint == {"t": 0}
    gm = seeds["Gm"]
    assert gm.ideal == ideal(gm.ring, "t1*t2 - 1")
    assert gm.basepoint == {"t1": 1, "t2": 1}
    jou = seeds["Jouanolou_A1_doubled"]
    assert jou.ideal == ideal(jou.ring, "x*y - z - z^2")
    assert jou.basepoint == {"x": 0, "y": 0, "z": 0}
    for X in seeds.values():
        assert contains_point(X, X.basepoint)


def test_parameterized_deformation_fresh_divisor():
    seeds = builtin_seeds()
    D = parameterized_deformation(seeds["S0"])
    assert D.parameter_vars == ("u",)
    assert D.torsor_vars == ("s1",)
    big = D.space.ring
    assert big.variables == ("t", "u", "s1")
    assert D.space.ideal == ideal(big, "t - t^2 - s1*u")
    assert D.space.basepoint == {"t": 0, "u": 0, "s1": 0}


def test_parameterized_deformation_existing_divisor():
    # one relation f - s1*g with g in existing variables: a global
    # hypersurface pairing a curve equation with a chosen divisor
    ring = PolynomialRing(ZZ, ["z1", "z2", "t"])
    f = ring.parse("z1^2 + z2^2 - 1")
    g = ring.parse("t*(t-1)")
    D = parameterized_deformation(Ideal(ring, [f]), g)
    assert D.parameter_vars == ()
    big = D.space.ring
    assert big.variables == ("z1", "z2", "t", "s1")
    expected = transport(f, big) - big.var("s1") * transport(g, big)
    assert D.space.ideal == Ideal(big, [expected])


def test_parameterized_deformation_unit_divisor_graph():
    ring = PolynomialRing(QQ, ["x", "y"])
    I = ideal(ring, "x^2 - y", "x*y")
    D = parameterized_deformation(I, ring.one)
    # relations f_i - t_i: the space is a graph over the ambient plane
    assert D.parameter_vars == ()
    assert len(D.space.ideal.generators) == 2


def test_parameterized_deformation_rejects_zero_divisor():
    ring = PolynomialRing(QQ, ["x"])
    with pytest.raises(ConstructionError):
        parameterized_deformation(ideal(ring, "x"), ring.zero)


def test_parameterized_deformation_rejects_colliding_name():
    ring = PolynomialRing(QQ, ["x"])
    with pytest.raises(ConstructionError):
        parameterized_deformation(ideal(ring, "x"), "x")


def test_suspension_of_s0_is_q2():
    seeds = builtin_seeds()
    D = suspension_model(seeds["S0"])
    big = D.space.ring
    assert big.variables == ("t", "x1", "y1")
    assert D.space.ideal == ideal(big, "t - t^2 - x1*y1")
    assert D.space.basepoint == {"t": 0, "x1": 0, "y1": 0}
    assert contains_point(D.space, D.space.basepoint)


def test_suspension_of_gm():
    D = suspension_model(builtin_seeds()["Gm"])
    big = D.space.ring
    assert D.space.ideal == ideal(big, "t1*t2 - 1 - x1*y1")
    assert D.space.basepoint == {"t1": 1, "t2": 1, "x1": 0, "y1": 0}


def test_suspension_requires_basepoint(qq_xy):
    X = AffinePresentation(qq_xy, ideal(qq_xy, "x*y - 1"))
    with pytest.raises(ConstructionError):
        suspension_model(X)


def test_suspension_requires_complete_intersection(qq_xyz):
    X = AffinePresentation(
        qq_xyz, ideal(qq_xyz, "x*y", "x*z"), {"x": 0, "y": 0, "z": 0}
    )
    with pytest.raises(ConstructionError):
        suspension_model(X)


def test_suspension_of_a_point_gives_plane():
    ring = PolynomialRing(ZZ, [])
    X = AffinePresentation(ring, Ideal(ring, []), {})
    D = suspension_model(X)
    assert D.space.ring.variables == ("x1", "y1")
    assert D.space.ideal.is_zero()
    assert D.space.basepoint == {"x1": 0, "y1": 0}


def test_iterated_suspension_identity_and_q4():
    seeds = builtin_seeds()
    assert iterated_suspension(seeds["S0"], 0).space is seeds["S0"]
    D = iterated_suspension(seeds["S0"], 2)
    big = D.space.ring
    assert D.space.ideal == ideal(big, "t - t^2 - x1*y1 - x2*y2")
    assert D.parameter_vars == ("x1", "x2")
    assert D.torsor_vars == ("y1", "y2")
    D3 = iterated_suspension(seeds["S0"], 3)
    assert D3.space.ring.arity == 7
    assert len(D3.space.ideal.generators) == 1


def test_relation_count_conservation():
    seeds = builtin_seeds()
    for seed in seeds.values():
        D = suspension_model(seed)
        assert len(D.space.ideal.generators) == len(seed.ideal.generators)


def test_suspension_smoothness_all_seeds():
    for seed in builtin_seeds().values():
        D = suspension_model(seed)
        rep = is_smooth_over_field(D.space, primes=(2, 3, 5))
        assert rep.smooth, seed.provenance


def test_danielewski_family_shapes():
    Rx = PolynomialRing(ZZ, ["x"])
    for r in (1, 2, 3):
        spec = FamilySpec((Rx.var("x") ** r,), (Rx.const(0), Rx.const(1)))
        X = danielewski_family(spec)
        assert X.ring.variables == ("x", "t1", "z")
        assert X.ideal == ideal(X.ring, f"x^{r}*t1 - z*(z-1)")
    Rf = PolynomialRing(ZZ, ["a", "b"])
    plane_curve = Rf.parse("a^2 - b^3 + 1")
    X = danielewski_family(FamilySpec((plane_curve,), (Rf.const(0), Rf.const(1))))
    big = X.ring
    assert X.ideal == Ideal(
        big, [transport(plane_curve, big) * big.var("t1") - big.parse("z*(z-1)")]
    )


def test_danielewski_two_generators():
    R2 = PolynomialRing(ZZ, ["x1", "x2"])
    spec = FamilySpec(
        (R2.var("x1"), R2.var("x2")), (R2.const(0), R2.const(1))
    )
    X = danielewski_family(spec)
    assert X.ideal == ideal(X.ring, "t1*x1 + t2*x2 - z*(z-1)")


def test_monomial_family_matches_danielewski():
    X = monomial_family((1, 1), (0, 1))
    R2 = PolynomialRing(ZZ, ["x1", "x2"])
    spec = FamilySpec((R2.var("x1"), R2.var("x2")), (R2.const(0), R2.const(1)))
    Y = danielewski_family(spec)
    assert X.ideal == Y.ideal
    X2 = monomial_family((2, 1), (0, 1))
    assert X2.ideal == ideal(X2.ring, "x1^2*t1 + x2*t2 - z^2 + z")


def test_monomial_family_from_polynomial_cover():
    Rz = PolynomialRing(ZZ, ["z"])
    X = monomial_family((1, 1), Rz.parse("z^2 - 3*z + 2"))  # roots 1, 2
    assert X.ideal == ideal(X.ring, "x1*t1 + x2*t2 - (z-1)*(z-2)")


def test_monomial_family_rejects_non_monic():
    Rz = PolynomialRing(ZZ, ["z"])
    with pytest.raises(Exception):
        monomial_family((1,), Rz.parse("z*(1-z)"))


def test_monomial_family_discriminant_flag():
    flagged = monomial_family((1,), (0, 1, 2))
    assert flagged.provenance["discriminant"] == "4"
    assert flagged.provenance["discriminant_is_unit"] == "false"
    good = monomial_family((1, 1), (0, 1))
    assert good.provenance["discriminant_is_unit"] == "true"


def test_quasi_affine_contractible_removed_ideals():
    spec = monomial_family_spec((1, 1), (0, 1))
    X1 = quasi_affine_contractible(spec, 1)
    big = X1.ring
    assert X1.removed == ideal(big, "x1", "x2", "z - 1")
    X2 = quasi_affine_contractible(spec, 2)
    assert X2.removed == ideal(big, "x1", "x2", "z")
    # removed contains the ambient relation
    assert ideal_membership(X1.ambient.ideal.generators[0], X1.removed)


def test_quasi_affine_contractible_preconditions():
    Rx = PolynomialRing(ZZ, ["x"])
    height_one = FamilySpec((Rx.var("x"),), (Rx.const(0), Rx.const(1)))
    with pytest.raises(ConstructionError):
        quasi_affine_contractible(height_one, 1)
    spec = monomial_family_spec((1, 1), (0, 1))
    with pytest.raises(ConstructionError):
        quasi_affine_contractible(spec, 3)  # branch index out of range
    R2 = PolynomialRing(ZZ, ["x1", "x2"])
    repeated = FamilySpec(
        (R2.var("x1"), R2.var("x2")), (R2.const(0), R2.const(0))
    )
    with pytest.raises(ConstructionError):
        quasi_affine_contractible(repeated, 1)


def test_family_spec_validation():
    Rx = PolynomialRing(ZZ, ["x"])
    with pytest.raises(ConstructionError):
        FamilySpec((), (Rx.const(0),))
    with pytest.raises(ConstructionError):
        FamilySpec((Rx.var("x"),), ())
    with pytest.raises(ConstructionError):
        FamilySpec((Rx.zero,), (Rx.const(0),))
    Rt = PolynomialRing(ZZ, ["t1"])  # collides with torsor naming
    with pytest.raises(ConstructionError):
        FamilySpec((Rt.var("t1"),), (Rt.const(0),))


def test_fresh_name_bumping():
    ring = PolynomialRing(ZZ, ["t", "x1"])  # x1 already taken
    X = AffinePresentation(ring, ideal(ring, "t - t^2"), {"t": 0, "x1": 0})
    D = suspension_model(X)
    assert D.parameter_vars == ("x1_",)


def test_pointing_invariant_all_constructions():
    seeds = builtin_seeds()
    for seed in seeds.values():
        for n in (1, 2):
            D = iterated_suspension(seed, n)
            assert contains_point(D.space, D.space.basepoint)
