from fractions import Fraction

import pytest

from suspforge import GF, QQ, ZZ, GREVLEX, LEX, PolynomialRing
from suspforge.parsing import ParseError, format_polynomial
from suspforge.polynomials import PolynomialError, RingMismatchError, transport


def test_parse_distributes(qq_xyz):
    f = qq_xyz.parse("x*y - z*(1-z)")
    x, y, z = qq_xyz.gens()
    assert f == x * y - z + z * z


def test_parse_seed_polynomial(zz_t):
    t = zz_t.var("t")
    assert zz_t.parse("t*(1-t)") == t - t * t


def test_parse_modular_collapse():
    ring = PolynomialRing(GF(3), ["x"])
    assert ring.parse("x^2 + 3") == ring.var("x") ** 2


def test_parse_errors(qq_xy):
    with pytest.raises(ParseError):
        qq_xy.parse("x + w")  # unknown variable
    with pytest.raises(ParseError):
        qq_xy.parse("x +")  # malformed
    with pytest.raises(ParseError):
        qq_xy.parse("x / y")  # division is not in the grammar
    with pytest.raises(ParseError):
        qq_xy.parse("x ^ y")  # exponent must be a literal
    with pytest.raises(ParseError):
        qq_xy.parse("2x")  # juxtaposition is not multiplication


def test_arith_examples(qq_xy):
    x, y = qq_xy.gens()
    assert (x + y) * (x - y) == x**2 - y**2
    z_ring = PolynomialRing(QQ, ["z"])
    z = z_ring.var("z")
    assert (z - z**2) + z**2 == z
    assert x**0 == qq_xy.one


def test_arith_ring_mismatch(qq_xy, qq_xyz):
    with pytest.raises(RingMismatchError):
        qq_xy.var("x") + qq_xyz.var("x")


def test_pow_rejects_negative(qq_xy):
    with pytest.raises(PolynomialError):
        qq_xy.var("x") ** -1


def test_evaluate_examples(qq_xyz, zz_t):
    f = qq_xyz.parse("x*y - z*(1-z)")
    assert f.evaluate({"x": 1, "y": 0, "z": 1}) == 0
    assert f.evaluate({"x": 1, "y": 1, "z": 0}) == 1
    assert zz_t.parse("t - t^2").evaluate({"t": 1}) == 0
    with pytest.raises(PolynomialError):
        f.evaluate({"x": 1, "y": 0})  # missing assignment


def test_partial_derivative_examples(qq_xy):
    z_ring = PolynomialRing(QQ, ["z"])
    z = z_ring.var("z")
    assert (z * (1 - z)).partial_derivative("z") == 1 - 2 * z
    x, y = qq_xy.gens()
    assert (x**2 * y).partial_derivative("x") == 2 * x * y
    f2 = PolynomialRing(GF(2), ["x"])
    assert f2.parse("x^2").partial_derivative("x").is_zero()
    with pytest.raises(PolynomialError):
        (x * y).partial_derivative("q")


def test_substitute_examples():
    ring = PolynomialRing(QQ, ["z", "u", "s"])
    f = ring.parse("z*(1-z) - s*u")
    target = ring.without(["u"])
    assert f.substitute({"u": 1}, into=target) == target.parse("z - z^2 - s")
    assert f.substitute({"u": 0}, into=target) == target.parse("z - z^2")
    assert f.substitute({}) == f


def test_substitute_polynomial_values(qq_xy):
    x, y = qq_xy.gens()
    f = x**2 + y
    assert f.substitute({"x": y + 1}) == (y + 1) ** 2 + y


def test_canonical_order_grevlex(qq_xyz):
    f = qq_xyz.parse("x*y - z*(1-z)")
    lead, _ = f.leading()
    assert lead == (1, 1, 0)  # xy beats z^2 in grevlex
    assert format_polynomial(f) == "x*y + z^2 - z"


def test_lex_vs_grevlex_leading():
    ring = PolynomialRing(QQ, ["x", "y"], LEX)
    f = ring.parse("x + y^2")
    assert f.leading()[0] == (1, 0)
    assert f.leading(GREVLEX)[0] == (0, 2)


def test_print_parse_roundtrip(qq_xyz):
    for text in ["x*y + z^2 - z", "x^3 - 2*x*y*z + 7", "0", "-x + 1"]:
        f = qq_xyz.parse(text)
        assert qq_xyz.parse(format_polynomial(f)) == f


def test_zero_polynomial_invariants(qq_xy):
    zero = qq_xy.zero
    assert zero.is_zero() and zero.total_degree() == -1
    assert not zero.terms
    assert format_polynomial(zero) == "0"


def test_coefficients_stored_normalized():
    ring = PolynomialRing(QQ, ["x"])
    f = ring.var("x").scale(Fraction(2, 4))
    assert list(f.terms.values()) == [Fraction(1, 2)]
    fp = PolynomialRing(GF(5), ["x"])
    g = fp.var("x").scale(7)
    assert list(g.terms.values()) == [2]


def test_transport_lift_and_reduce(zz_t):
    f = zz_t.parse("2*t^2 - 3")
    qring = zz_t.with_coefficients(QQ)
    assert transport(f, qring) == qring.parse("2*t^2 - 3")
    f2ring = zz_t.with_coefficients(GF(2))
    assert transport(f, f2ring) == f2ring.parse("1")


def test_transport_rename(zz_t):
    target = PolynomialRing(ZZ, ["z"])
    f = zz_t.parse("t - t^2")
    assert transport(f, target, rename={"t": "z"}) == target.parse("z - z^2")


def test_ring_validation():
    with pytest.raises(PolynomialError):
        PolynomialRing(QQ, ["x", "x"])
    with pytest.raises(PolynomialError):
        PolynomialRing(QQ, [""])
    with pytest.raises(PolynomialError):
        PolynomialRing(QQ, ["1bad"])
