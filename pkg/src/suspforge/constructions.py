"""Builders for the explicit presentations this tool studies: parameterized
deformation spaces, pointed suspension models and their iterates, the
one-relation families over a branched cover polynomial, quasi-affine
contractible complements, and the built-in seed schemes.

Fresh-variable naming is deterministic; when a scheme-generated name would
collide with an existing variable, trailing underscores are appended.  A
caller-chosen name that collides is an error instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .groebner import EMPTY, Ideal, krull_dimension
from .polynomials import (
    NotSplitError,
    Polynomial,
    PolynomialError,
    PolynomialRing,
    discriminant,
    poly_from_roots,
    split_roots,
    transport,
)
from .rings import Integers, ZZ, CoefficientRing
from .schemes import (
    AffinePresentation,
    QuasiAffinePresentation,
    SchemeError,
    complete_intersection_check,
)


class ConstructionError(ValueError):
    pass


def _fresh_name(base: str, taken) -> str:
    name = base
    while name in taken:
        name += "_"
    return name


@dataclass(frozen=True)
class FreshNames:
    """Base names for scheme-generated fresh variables."""

    parameter: str = "u"
    torsor: str = "s"


@dataclass(frozen=True)
class DeformationStep:
    construction: str
    input: AffinePresentation
    parameter: Polynomial  # the divisor direction g, in the output ring
    parameter_vars: tuple[str, ...]
    torsor_vars: tuple[str, ...]


@dataclass(frozen=True)
class DeformationResult:
    """Output presentation plus the bookkeeping needed to re-derive it."""

    space: AffinePresentation
    parameter_vars: tuple[str, ...]
    torsor_vars: tuple[str, ...]
    provenance: tuple[DeformationStep, ...]

    @property
    def input(self) -> AffinePresentation:
        if not self.provenance:
            return self.space
        return self.provenance[0].input


def _build_deformation(
    source: AffinePresentation,
    g,
    param_name: str | None,
    torsor_names: Sequence[str],
    construction: str,
) -> DeformationResult:
    """Core builder: one relation f_i - t_i * g per generator f_i.

    ``g`` is a polynomial of the source ring, or None to use the single fresh
    parameter variable ``param_name``.
    """
    ring = source.ring
    gens = source.ideal.generators
    if len(torsor_names) != len(gens):
        raise ConstructionError("need one torsor variable per generator")
    new_vars = list(ring.variables)
    param_vars: tuple[str, ...] = ()
    if param_name is not None:
        new_vars.append(param_name)
        param_vars = (param_name,)
    new_vars.extend(torsor_names)
    if len(set(new_vars)) != len(new_vars):
        raise ConstructionError("fresh-name collision")
    big = PolynomialRing(ring.coefficients, new_vars, ring.order)

    if g is None:
        g_big = big.var(param_name)
    else:
        if not isinstance(g, Polynomial):
            raise ConstructionError("divisor must be a polynomial or None")
        if g.is_zero():
            raise ConstructionError("the divisor g must be nonzero")
        g_big = transport(g, big)

    relations = []
    for name, f in zip(torsor_names, gens):
        relations.append(transport(f, big) - big.var(name) * g_big)

    point = None
    if source.basepoint is not None:
        point = dict(source.basepoint)
        for name in param_vars + tuple(torsor_names):
            point[name] = 0

    space = AffinePresentation(big, Ideal(big, relations), point)
    step = DeformationStep(
        construction=construction,
        input=source,
        parameter=g_big,
        parameter_vars=param_vars,
        torsor_vars=tuple(torsor_names),
    )
    return DeformationResult(space, param_vars, tuple(torsor_names), (step,))


def parameterized_deformation(
    source: AffinePresentation | Ideal,
    g: Polynomial | str | None = None,
    fresh: FreshNames = FreshNames(),
) -> DeformationResult:
    """The affine chart of the deformation of V(I) along the divisor g:
    relations (f_1 - t_1*g, ..., f_c - t_c*g) in the enlarged ring.

    ``g`` may be a nonzero polynomial in existing variables, the name of a
    fresh parameter variable, or None to draw the parameter name from
    ``fresh``.  A caller-supplied name that collides is an error.
    """
    if isinstance(source, Ideal):
        source = AffinePresentation(source.ring, source)
    ring = source.ring
    if isinstance(g, str):
        if g in ring.variables:
            raise ConstructionError(f"fresh-name collision: {g!r}")
        param_name = g
        g = None
    elif g is None:
        param_name = _fresh_name(fresh.parameter, ring.variables)
    else:
        param_name = None
    taken = set(ring.variables)
    if param_name is not None:
        taken.add(param_name)
    torsor_names = []
    for i in range(1, len(source.ideal.generators) + 1):
        name = _fresh_name(f"{fresh.torsor}{i}", taken)
        torsor_names.append(name)
        taken.add(name)
    return _build_deformation(
        source, g, param_name, torsor_names, "parameterized_deformation"
    )


def suspension_model(
    X: AffinePresentation, step: int = 1
) -> DeformationResult:
    """Deformation of a pointed presentation along a fresh parameter variable,
    embedding X into affine space by its own presentation.  Step ``k``
    introduces the parameter x_k and torsor variables y_k (y_k_i when the
    ideal has several generators).

    The base point extends by zero on all fresh variables.  A presentation
    whose pruned generator list is empty degenerates to X times the affine
    plane, with both fresh variables present and no relations.
    """
    if X.basepoint is None:
        raise ConstructionError("suspension needs a pointed presentation")
    ci = complete_intersection_check(X)
    if not ci.is_ci:
        raise ConstructionError(
            "suspension needs a complete-intersection presentation"
        )
    taken = set(X.ring.variables)
    param = _fresh_name(f"x{step}", taken)
    taken.add(param)
    c = len(X.ideal.generators)
    if c <= 1:
        torsors = [_fresh_name(f"y{step}", taken)]
    else:
        torsors = []
        for i in range(1, c + 1):
            name = _fresh_name(f"y{step}_{i}", taken)
            torsors.append(name)
            taken.add(name)
    if c == 0:
        # degenerate: no relations; keep the allocated plane coordinates
        big = X.ring.extend([param] + torsors)
        point = dict(X.basepoint)
        point[param] = 0
        point[torsors[0]] = 0
        space = AffinePresentation(big, Ideal(big, []), point)
        step_record = DeformationStep(
            "suspension_model", X, big.var(param), (param,), tuple(torsors)
        )
        return DeformationResult(space, (param,), tuple(torsors), (step_record,))
    result = _build_deformation(X, None, param, torsors, "suspension_model")
    return result


def iterated_suspension(X: AffinePresentation, n: int) -> DeformationResult:
    """n-fold suspension, re-embedding through the output presentation each
    time; step k introduces x_k and y_k."""
    if n < 0:
        raise ConstructionError("iteration count must be non-negative")
    if n == 0:
        return DeformationResult(X, (), (), ())
    current = X
    params: list[str] = []
    torsors: list[str] = []
    steps: list[DeformationStep] = []
    for k in range(1, n + 1):
        result = suspension_model(current, step=k)
        params.extend(result.parameter_vars)
        torsors.extend(result.torsor_vars)
        steps.extend(result.provenance)
        current = result.space
    return DeformationResult(current, tuple(params), tuple(torsors), tuple(steps))


# -- one-relation families ---------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Data for the family sum(t_i * f_i) = prod(z - a_j) over the base ring
    of the generators; roots may be constants or polynomials in the base
    variables."""

    generators: tuple[Polynomial, ...]
    roots: tuple[Polynomial, ...]
    torsor_base: str = "t"
    branch_var: str = "z"

    def __post_init__(self):
        if not self.generators:
            raise ConstructionError("need at least one ideal generator")
        if not self.roots:
            raise ConstructionError("need at least one root")
        ring = self.generators[0].ring
        for g in self.generators:
            if g.is_zero():
                raise ConstructionError("ideal generators must be nonzero")
            if not g.ring.same_variables(ring):
                raise ConstructionError("generators live in different rings")
        for a in self.roots:
            if not a.ring.same_variables(ring):
                raise ConstructionError("roots live in a different ring")
        fresh = [f"{self.torsor_base}{i}" for i in range(1, len(self.generators) + 1)]
        fresh.append(self.branch_var)
        if set(fresh) & set(ring.variables):
            raise ConstructionError("fresh names collide with base variables")

    @property
    def ring(self) -> PolynomialRing:
        return self.generators[0].ring

    @property
    def base_ideal(self) -> Ideal:
        return Ideal(self.ring, self.generators)

    @property
    def n(self) -> int:
        return self.ring.arity

    @property
    def r(self) -> int:
        return len(self.generators)

    @property
    def s(self) -> int:
        return len(self.roots)

    def constant_roots(self) -> list:
        """The roots as coefficient values; error if any is non-constant."""
        values = []
        for a in self.roots:
            if not a.is_constant():
                raise ConstructionError("roots are not constants")
            values.append(a.constant_value())
        return values

    def with_coefficients(self, coefficients: CoefficientRing) -> "FamilySpec":
        ring = self.ring.with_coefficients(coefficients)
        return FamilySpec(
            tuple(transport(g, ring) for g in self.generators),
            tuple(transport(a, ring) for a in self.roots),
            self.torsor_base,
            self.branch_var,
        )

    def branch_polynomial(self, ring: PolynomialRing | None = None) -> Polynomial:
        """The monic product prod(z - a_j) in a univariate extension of the
        base ring (or in ``ring`` when given)."""
        if ring is None:
            ring = self.ring.extend([self.branch_var])
        return poly_from_roots(
            ring, self.branch_var, [transport(a, ring) for a in self.roots]
        )


def danielewski_family(spec: FamilySpec) -> AffinePresentation:
    """The hypersurface sum(t_i * f_i) = prod(z - a_j) in the ring extended by
    t_1..t_r and z."""
    ring = spec.ring
    torsors = [f"{spec.torsor_base}{i}" for i in range(1, spec.r + 1)]
    big = ring.extend(torsors + [spec.branch_var])
    lhs = big.zero
    for name, f in zip(torsors, spec.generators):
        lhs = lhs + big.var(name) * transport(f, big)
    relation = lhs - spec.branch_polynomial(big)
    provenance = {
        "construction": "danielewski_family",
        "generators": ", ".join(str(g) for g in spec.generators),
        "roots": ", ".join(str(a) for a in spec.roots),
    }
    return AffinePresentation(big, Ideal(big, [relation]), None, provenance)


def _unit_leading_roots(P: Polynomial) -> tuple[list, object]:
    """(roots, leading coefficient) of a univariate split polynomial whose
    leading coefficient is a unit; anything else is rejected as non-monic."""
    if P.ring.arity != 1:
        raise ConstructionError("cover polynomial must be univariate")
    var = P.ring.variables[0]
    from .polynomials import coefficients_in

    lead = coefficients_in(P, var)[0]
    if not lead.is_constant():
        raise ConstructionError("cover polynomial leading coefficient not constant")
    lc = lead.constant_value()
    try:
        inv = P.ring.coefficients.invert(lc)
    except Exception:
        raise ConstructionError(
            "cover polynomial is not monic (leading coefficient is not a unit)"
        ) from None
    return split_roots(P.scale(inv), var), lc


def monomial_family_spec(
    m: Sequence[int],
    roots,
    coefficients: CoefficientRing = ZZ,
    x_base: str = "x",
    torsor_base: str = "t",
    branch_var: str = "z",
) -> FamilySpec:
    """FamilySpec with monomial generators x_i^(m_i) and the given roots.

    ``roots`` is a sequence of constants, or a univariate unit-leading
    polynomial that splits over the coefficient ring (rejected otherwise).
    """
    if not m or any(not isinstance(e, int) or e < 1 for e in m):
        raise ConstructionError("weights must be positive integers")
    ring = PolynomialRing(coefficients, [f"{x_base}{i}" for i in range(1, len(m) + 1)])
    gens = [ring.var(v) ** e for v, e in zip(ring.variables, m)]
    if isinstance(roots, Polynomial):
        root_values, _ = _unit_leading_roots(roots)
    else:
        root_values = [coefficients.normalize(a) for a in roots]
    root_polys = tuple(ring.const(a) for a in root_values)
    return FamilySpec(tuple(gens), root_polys, torsor_base, branch_var)


def monomial_family(
    m: Sequence[int],
    roots,
    coefficients: CoefficientRing = ZZ,
    **kwargs,
) -> AffinePresentation:
    """The family sum(x_i^(m_i) * t_i) = P(z).

    ``roots`` as a sequence gives the monic P = prod(z - a_j).  A polynomial
    argument is used literally (its leading coefficient must be a unit), so
    the orientation of the defining equation is preserved: with all weights
    1 and P = z*(1-z) this is exactly the smooth affine quadric of dimension
    2n.  Relative to the root-product form the two orientations differ by
    the sign map t_i -> -t_i, which is recorded in the provenance.

    Over Z the discriminant of the cover is recorded along with whether it
    is a unit; a non-unit discriminant flags a prime of bad reduction.
    """
    spec = monomial_family_spec(m, roots, coefficients, **kwargs)
    pres = danielewski_family(spec)
    provenance = dict(pres.provenance or {})
    provenance["construction"] = "monomial_family"
    provenance["weights"] = ", ".join(str(e) for e in m)
    ideal = pres.ideal
    if isinstance(roots, Polynomial):
        _, lc = _unit_leading_roots(roots)
        big = pres.ring
        relation = big.zero
        torsors = [f"{spec.torsor_base}{i}" for i in range(1, spec.r + 1)]
        for name, f in zip(torsors, spec.generators):
            relation = relation + big.var(name) * transport(f, big)
        relation = relation - transport(
            roots, big, rename={roots.ring.variables[0]: spec.branch_var}
        )
        ideal = Ideal(big, [relation])
        provenance["cover_polynomial"] = str(roots)
        if lc != coefficients.one:
            provenance["sign_map"] = "t_i -> -t_i relative to the root product"
    values = spec.constant_roots()
    zring = PolynomialRing(coefficients, [spec.branch_var])
    P = poly_from_roots(zring, spec.branch_var, values)
    if P.degree_in(spec.branch_var) >= 1:
        disc = discriminant(P, spec.branch_var)
        provenance["discriminant"] = str(disc)
        if isinstance(coefficients, Integers):
            unit = disc in (1, -1)
        else:
            unit = disc != coefficients.zero
        provenance["discriminant_is_unit"] = "true" if unit else "false"
    return AffinePresentation(pres.ring, ideal, None, provenance)


def quasi_affine_contractible(spec: FamilySpec, j: int) -> QuasiAffinePresentation:
    """The complement X_j of the closed locus E_j = V(I, prod_{i != j}(z - a_i))
    inside the family; requires at least two generators cutting out
    codimension >= 2 and pairwise distinct constant roots."""
    if spec.r < 2:
        raise ConstructionError("need at least two ideal generators")
    if not 1 <= j <= spec.s:
        raise ConstructionError(f"branch index {j} out of range 1..{spec.s}")
    values = spec.constant_roots()
    if len(set(values)) != len(values):
        raise ConstructionError("roots must be pairwise distinct")
    dim = krull_dimension(spec.base_ideal)
    codim = spec.n if dim == EMPTY else spec.n - dim
    if codim < 2:
        raise ConstructionError(
            f"ideal has codimension {codim}; need at least 2"
        )
    ambient = danielewski_family(spec)
    big = ambient.ring
    others = [a for i, a in enumerate(values, start=1) if i != j]
    removed_gens = [transport(g, big) for g in spec.generators]
    removed_gens.append(poly_from_roots(big, spec.branch_var, others))
    return QuasiAffinePresentation(ambient, Ideal(big, removed_gens))


# -- built-in seeds -----------------------------------------------------------------


def builtin_seeds() -> dict[str, AffinePresentation]:
    """The pointed seed schemes: the two-point scheme, the unit hyperbola, and
    the smooth affine quadric surface covering the doubled affine line."""
    seeds = {}

    Rt = PolynomialRing(ZZ, ["t"])
    seeds["S0"] = AffinePresentation(
        Rt,
        Ideal(Rt, [Rt.parse("t*(1-t)")]),
        {"t": 0},
        {"construction": "builtin_seed", "name": "S0"},
    )

    R2 = PolynomialRing(ZZ, ["t1", "t2"])
    seeds["Gm"] = AffinePresentation(
        R2,
        Ideal(R2, [R2.parse("t1*t2 - 1")]),
        {"t1": 1, "t2": 1},
        {"construction": "builtin_seed", "name": "Gm"},
    )

    R3 = PolynomialRing(ZZ, ["x", "y", "z"])
    seeds["Jouanolou_A1_doubled"] = AffinePresentation(
        R3,
        Ideal(R3, [R3.parse("x*y - z*(1+z)")]),
        {"x": 0, "y": 0, "z": 0},
        {"construction": "builtin_seed", "name": "Jouanolou_A1_doubled"},
    )
    return seeds
