"""Affine and quasi-affine presentations with the structural hypothesis checks:
complete intersection, Jacobian smoothness, the etale-splitting criterion for
the finite cover cut out by a univariate polynomial, and fiber extraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .groebner import (
    EMPTY,
    Ideal,
    is_unit_ideal,
    jacobian_minors_ideal,
    krull_dimension,
    ideal_membership,
)
from .polynomials import Polynomial, PolynomialError, PolynomialRing, transport
from .rings import GF, Integers, QQ, CoefficientRing

DEFAULT_PRIMES = (2, 3, 5)


class SchemeError(ValueError):
    pass


class EmptySchemeError(SchemeError):
    """The ideal is the unit ideal; the presentation has no points."""


class NotCompleteIntersectionError(SchemeError):
    """The generators do not form a complete intersection, so the Jacobian
    corank heuristic would be unsound."""


class BasePointError(SchemeError):
    """The declared base point does not lie on the scheme."""


class AffinePresentation:
    """A closed subscheme of affine space: (polynomial ring, ideal), with an
    optional base point that must lie on the scheme."""

    __slots__ = ("ring", "ideal", "basepoint", "provenance")

    def __init__(
        self,
        ring: PolynomialRing,
        ideal: Ideal,
        basepoint: Mapping[str, object] | None = None,
        provenance: Mapping[str, str] | None = None,
    ):
        if ideal.ring != ring and not ideal.ring.same_variables(ring):
            raise SchemeError("ideal ring does not match the presentation ring")
        point = None
        if basepoint is not None:
            coeffs = ring.coefficients
            point = {}
            for name in ring.variables:
                if name not in basepoint:
                    raise BasePointError(f"base point misses variable {name!r}")
                point[name] = coeffs.normalize(basepoint[name])
            for extra in basepoint:
                ring.index(extra)
            for g in ideal.generators:
                if g.evaluate(point) != coeffs.zero:
                    raise BasePointError(
                        f"base point does not lie on the scheme: {g} != 0"
                    )
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "ideal", ideal)
        object.__setattr__(self, "basepoint", point)
        object.__setattr__(
            self, "provenance", dict(provenance) if provenance else None
        )

    def __setattr__(self, name, value):
        raise AttributeError("AffinePresentation is immutable")

    def is_pointed(self) -> bool:
        return self.basepoint is not None

    def basepoint_tuple(self) -> tuple | None:
        if self.basepoint is None:
            return None
        return tuple(self.basepoint[v] for v in self.ring.variables)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.ideal.generators) or "0"
        tail = ""
        if self.basepoint is not None:
            tail = f" @ {self.basepoint_tuple()}"
        return f"V({gens}) in {self.ring}{tail}"


class QuasiAffinePresentation:
    """An affine presentation minus the closed locus of ``removed``; the
    removed ideal must contain the ambient ideal."""

    __slots__ = ("ambient", "removed")

    def __init__(self, ambient: AffinePresentation, removed: Ideal):
        if not removed.ring.same_variables(ambient.ring):
            raise SchemeError("removed ideal lives in a different ring")
        for g in ambient.ideal.generators:
            if not ideal_membership(g, removed):
                raise SchemeError(
                    "removed ideal does not contain the ambient ideal"
                )
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "removed", removed)

    def __setattr__(self, name, value):
        raise AttributeError("QuasiAffinePresentation is immutable")

    @property
    def ring(self) -> PolynomialRing:
        return self.ambient.ring

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.removed.generators)
        return f"{self.ambient!r} minus V({gens})"


# -- checks ----------------------------------------------------------------------


@dataclass(frozen=True)
class CompleteIntersectionReport:
    codimension: int
    generator_count: int
    is_ci: bool


def complete_intersection_check(X: AffinePresentation) -> CompleteIntersectionReport:
    """Codimension versus generator count.  Over a polynomial ring equality
    certifies the generators form a regular sequence."""
    dim = krull_dimension(X.ideal)
    if dim == EMPTY:
        raise EmptySchemeError("the presentation is empty (unit ideal)")
    codim = X.ring.arity - dim
    count = len(X.ideal.generators)
    return CompleteIntersectionReport(codim, count, codim == count)


@dataclass(frozen=True)
class SmoothnessEntry:
    characteristic: int
    smooth: bool
    singular_ideal: Ideal


@dataclass(frozen=True)
class SmoothnessReport:
    entries: tuple[SmoothnessEntry, ...]
    caveat: str | None = None

    @property
    def smooth(self) -> bool:
        return all(e.smooth for e in self.entries)

    def entry(self, characteristic: int) -> SmoothnessEntry:
        for e in self.entries:
            if e.characteristic == characteristic:
                return e
        raise KeyError(characteristic)


def _smoothness_over_field(X: AffinePresentation) -> SmoothnessEntry:
    ci = complete_intersection_check(X)
    if not ci.is_ci:
        raise NotCompleteIntersectionError(
            f"codimension {ci.codimension} != {ci.generator_count} generators"
        )
    char = X.ring.coefficients.characteristic
    gens = X.ideal.generators
    if ci.codimension == 0:
        # affine space: empty singular locus by convention
        singular = Ideal(X.ring, [X.ring.one])
        return SmoothnessEntry(char, True, singular)
    minors = jacobian_minors_ideal(gens, X.ring.variables, ci.codimension)
    singular = Ideal(X.ring, gens + minors.generators)
    return SmoothnessEntry(char, is_unit_ideal(singular), singular)


def reduce_presentation(
    X: AffinePresentation, coefficients: CoefficientRing
) -> AffinePresentation:
    """The presentation with coefficients moved along the canonical map
    (Z -> Q, Z -> F_p, Q -> F_p where denominators permit)."""
    ring = X.ring.with_coefficients(coefficients)
    ideal = Ideal(ring, [transport(g, ring) for g in X.ideal.generators])
    point = None
    if X.basepoint is not None:
        point = {k: coefficients.normalize(v) for k, v in X.basepoint.items()}
    return AffinePresentation(ring, ideal, point, X.provenance)


def is_smooth_over_field(
    X: AffinePresentation, primes: Sequence[int] | None = None
) -> SmoothnessReport:
    """Jacobian-criterion smoothness.

    Over a field this is the genuine criterion for the single characteristic.
    Over Z the check runs over Q and over F_p for each listed prime (default
    2, 3, 5); that sweep is a desk-scale surrogate for smoothness of all
    fibers, and the report says so.
    """
    domain = X.ring.coefficients
    if domain.is_field:
        return SmoothnessReport((_smoothness_over_field(X),))
    if not isinstance(domain, Integers):
        raise SchemeError(f"smoothness unsupported over {domain}")
    sweep = [QQ] + [GF(p) for p in (primes or DEFAULT_PRIMES)]
    entries = tuple(
        _smoothness_over_field(reduce_presentation(X, k)) for k in sweep
    )
    return SmoothnessReport(
        entries,
        caveat=(
            "smoothness over Z checked over Q and finitely many primes; "
            "this is a desk-scale surrogate for all fibers"
        ),
    )


def etale_split_check(I: Ideal, P: Polynomial, z_var: str = "z") -> bool:
    """Whether the finite cover adjoining a root of ``P`` is etale over V(I):
    true iff 1 lies in (I, P, dP/dz) in the ring extended by the fresh
    variable of ``P``.  Field coefficients only; sweep Z inputs by
    characteristic at the call site."""
    ring = I.ring
    if not ring.coefficients.is_field:
        raise SchemeError("etale check needs field coefficients")
    if z_var in ring.variables:
        raise SchemeError(f"variable {z_var!r} collides with the base ring")
    extended = ring.extend([z_var])
    P_ext = transport(P, extended)
    if P_ext.degree_in(z_var) < 1:
        raise PolynomialError("cover polynomial must have positive degree")
    gens = [transport(g, extended) for g in I.generators]
    gens.append(P_ext)
    gens.append(P_ext.partial_derivative(z_var))
    return is_unit_ideal(Ideal(extended, gens))


def fiber(X: AffinePresentation, point: Mapping[str, object]) -> AffinePresentation:
    """Specialize the named variables to coefficient values; the result is a
    presentation in the remaining variables with zero generators pruned."""
    coeffs = X.ring.coefficients
    values = {name: coeffs.normalize(v) for name, v in point.items()}
    for name in values:
        X.ring.index(name)
    target = X.ring.without(values)
    gens = [g.substitute(values, into=target) for g in X.ideal.generators]
    new_point = None
    if X.basepoint is not None:
        if all(X.basepoint[name] == v for name, v in values.items()):
            new_point = {
                k: v for k, v in X.basepoint.items() if k not in values
            }
    return AffinePresentation(target, Ideal(target, gens), new_point, X.provenance)


def contains_point(
    X: AffinePresentation | QuasiAffinePresentation, point: Mapping[str, object]
) -> bool:
    """Whether the full assignment is a point of the presentation.  For a
    quasi-affine presentation some removed generator must also be nonzero."""
    ambient = X.ambient if isinstance(X, QuasiAffinePresentation) else X
    coeffs = ambient.ring.coefficients
    values = {}
    for name in ambient.ring.variables:
        if name not in point:
            raise SchemeError(f"missing assignment for variable {name!r}")
        values[name] = coeffs.normalize(point[name])
    if any(g.evaluate(values) != coeffs.zero for g in ambient.ideal.generators):
        return False
    if isinstance(X, QuasiAffinePresentation):
        return any(
            g.evaluate(values) != coeffs.zero for g in X.removed.generators
        )
    return True
