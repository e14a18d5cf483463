"""Groebner-basis engine: multivariate division, reduced Buchberger, ideal
membership, unit-ideal and dimension tests, elimination, saturation, and
Jacobian-minor ideals.

Basis computation runs over field coefficients; ideals over Z are lifted to
Q transparently.  Reduced bases are canonical for a fixed order, so ideal
equality, membership, and all downstream checks are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .orders import GREVLEX, MonomialOrder, elimination_order
from .polynomials import (
    Polynomial,
    PolynomialError,
    PolynomialRing,
    RingMismatchError,
    poly_determinant,
    transport,
)
from .rings import Integers, QQ

EMPTY = "empty"
"""Distinguished dimension value for the empty scheme (the unit ideal)."""


class UnsupportedRingError(ValueError):
    """Basis computation asked for over a non-field that cannot be lifted."""


class Ideal:
    """Finitely generated ideal; zero generators are pruned on construction.

    Equality and hashing go through the reduced Groebner basis (over the
    field lift for Z coefficients), so equal ideals with different generator
    lists compare equal.
    """

    __slots__ = ("ring", "generators", "_hash")

    def __init__(self, ring: PolynomialRing, generators: Iterable[Polynomial]):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial) or not g.ring.same_variables(ring):
                raise RingMismatchError("generator outside the ideal's ring")
            if not g.is_zero():
                gens.append(Polynomial(ring, dict(g.terms)))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Ideal is immutable")

    def is_zero(self) -> bool:
        return not self.generators

    def equals(self, other: "Ideal") -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        if not self.ring.same_variables(other.ring):
            return False
        return reduced_basis(self) == reduced_basis(other)

    __eq__ = equals

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring.coefficients, self.ring.variables, reduced_basis(self)))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.generators) or "0"
        return f"ideal({inner}) in {self.ring}"


@dataclass(frozen=True)
class GroebnerBasis:
    ideal: Ideal
    order: MonomialOrder
    elements: tuple[Polynomial, ...]

    def __iter__(self):
        return iter(self.elements)


def _field_lift(ideal: Ideal) -> tuple[Ideal, PolynomialRing]:
    """The ideal over a coefficient field, lifting Z to Q."""
    ring = ideal.ring
    if ring.coefficients.is_field:
        return ideal, ring
    if isinstance(ring.coefficients, Integers):
        lifted = ring.with_coefficients(QQ)
        return Ideal(lifted, [transport(g, lifted) for g in ideal.generators]), lifted
    raise UnsupportedRingError(
        f"basis computation unsupported over {ring.coefficients}"
    )


# -- division ------------------------------------------------------------------


def _monomial_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def divide(
    f: Polynomial,
    divisors: Sequence[Polynomial],
    order: MonomialOrder | None = None,
) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division: f = sum(q_i * d_i) + r where no monomial of r is
    divisible by any divisor's leading monomial.  Field coefficients required;
    Z inputs are lifted to Q."""
    if any(d.is_zero() for d in divisors):
        raise PolynomialError("zero polynomial among divisors")
    ring = f.ring
    if not ring.coefficients.is_field:
        if not isinstance(ring.coefficients, Integers):
            raise UnsupportedRingError(f"division over {ring.coefficients}")
        lifted = ring.with_coefficients(QQ)
        f = transport(f, lifted)
        divisors = [transport(d, lifted) for d in divisors]
        ring = lifted
    for d in divisors:
        if not d.ring.same_variables(ring):
            raise RingMismatchError("divisor in a different ring")
    order = order or ring.order
    coeffs = ring.coefficients
    key = order.key

    leads = [d.leading(order) for d in divisors]
    quotients = [ring.zero for _ in divisors]
    remainder_terms: dict = {}
    work = dict(f.terms)

    while work:
        lm = max(work, key=key)
        lc = work[lm]
        for i, (dm, dc) in enumerate(leads):
            if _monomial_divides(dm, lm):
                shift = tuple(a - b for a, b in zip(lm, dm))
                factor = coeffs.mul(lc, coeffs.invert(dc))
                term = Polynomial(ring, {shift: factor})
                quotients[i] = quotients[i] + term
                reducer = term * divisors[i]
                for exps, c in reducer.terms.items():
                    value = coeffs.sub(work.get(exps, coeffs.zero), c)
                    if value == coeffs.zero:
                        work.pop(exps, None)
                    else:
                        work[exps] = value
                break
        else:
            remainder_terms[lm] = lc
            del work[lm]

    return quotients, Polynomial(ring, remainder_terms)


def normal_form(
    f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder
) -> Polynomial:
    """Remainder of f on division by the basis (no quotient bookkeeping)."""
    if not basis:
        return f
    ring = f.ring
    coeffs = ring.coefficients
    key = order.key
    leads = [g.leading(order) for g in basis]
    remainder: dict = {}
    work = dict(f.terms)
    while work:
        lm = max(work, key=key)
        lc = work[lm]
        for g, (gm, gc) in zip(basis, leads):
            if _monomial_divides(gm, lm):
                shift = tuple(a - b for a, b in zip(lm, gm))
                factor = coeffs.mul(lc, coeffs.invert(gc))
                for exps, c in g.terms.items():
                    target = tuple(a + b for a, b in zip(exps, shift))
                    value = coeffs.sub(
                        work.get(target, coeffs.zero), coeffs.mul(factor, c)
                    )
                    if value == coeffs.zero:
                        work.pop(target, None)
                    else:
                        work[target] = value
                break
        else:
            remainder[lm] = lc
            del work[lm]
    return Polynomial(ring, remainder)


# -- Buchberger ------------------------------------------------------------------


def spolynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    fm, fc = f.leading(order)
    gm, gc = g.leading(order)
    lcm = tuple(max(a, b) for a, b in zip(fm, gm))
    coeffs = f.ring.coefficients
    tf = Polynomial(
        f.ring,
        {tuple(l - a for l, a in zip(lcm, fm)): coeffs.invert(fc)},
    )
    tg = Polynomial(
        f.ring,
        {tuple(l - a for l, a in zip(lcm, gm)): coeffs.invert(gc)},
    )
    return tf * f - tg * g


def _buchberger(gens: Sequence[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Reduced Buchberger with the product and chain criteria.

    Pair selection is by (total degree of the lcm, generator indices), which
    together with the canonical final reduction makes the output independent
    of the input generator order.
    """
    import heapq

    basis = []
    for g in gens:
        if not g.is_zero():
            basis.append(g.monic(order))
    # deduplicate while preserving order
    seen: set = set()
    basis = [g for g in basis if not (g in seen or seen.add(g))]
    if not basis:
        return []

    leads = [g.leading(order)[0] for g in basis]

    def lcm_of(i, j):
        return tuple(max(a, b) for a, b in zip(leads[i], leads[j]))

    heap: list = []
    pending: set = set()

    def push(i, j):
        lcm = lcm_of(i, j)
        heapq.heappush(heap, (sum(lcm), i, j))
        pending.add((i, j))

    for i, j in combinations(range(len(basis)), 2):
        push(i, j)

    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lcm = lcm_of(i, j)
        # product criterion: coprime leading monomials
        if all(a + b == l for a, b, l in zip(leads[i], leads[j], lcm)):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if not _monomial_divides(leads[k], lcm):
                continue
            pair_ik = (min(i, k), max(i, k))
            pair_jk = (min(j, k), max(j, k))
            if pair_ik not in pending and pair_jk not in pending:
                skip = True
                break
        if skip:
            continue
        h = normal_form(spolynomial(basis[i], basis[j], order), basis, order)
        if h.is_zero():
            continue
        h = h.monic(order)
        basis.append(h)
        leads.append(h.leading(order)[0])
        new = len(basis) - 1
        for k in range(new):
            push(k, new)
    return basis


def _reduce_basis(basis: list[Polynomial], order: MonomialOrder) -> tuple[Polynomial, ...]:
    """Minimalize and autoreduce; output sorted descending by leading monomial."""
    if not basis:
        return ()
    key = order.key
    # minimal: drop any element whose leading monomial another's divides
    leads = [g.leading(order)[0] for g in basis]
    keep = []
    for i, g in enumerate(basis):
        lm = leads[i]
        redundant = False
        for j, other in enumerate(leads):
            if i == j:
                continue
            if _monomial_divides(other, lm) and (other != lm or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    # autoreduce each against the others
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        h = normal_form(g, others, order) if others else g
        if not h.is_zero():
            reduced.append(h.monic(order))
    reduced.sort(key=lambda p: key(p.leading(order)[0]), reverse=True)
    return tuple(reduced)


_BASIS_CACHE: dict = {}


def groebner_basis(ideal: Ideal, order: MonomialOrder | None = None) -> GroebnerBasis:
    """The reduced Groebner basis (monic elements, canonical ordering)."""
    field_ideal, _ = _field_lift(ideal)
    order = order or field_ideal.ring.order
    cache_key = (field_ideal.ring, field_ideal.generators, order)
    elements = _BASIS_CACHE.get(cache_key)
    if elements is None:
        elements = _reduce_basis(
            _buchberger(field_ideal.generators, order), order
        )
        _BASIS_CACHE[cache_key] = elements
    return GroebnerBasis(ideal=ideal, order=order, elements=elements)


def reduced_basis(
    ideal: Ideal, order: MonomialOrder | None = None
) -> tuple[Polynomial, ...]:
    return groebner_basis(ideal, order).elements


def is_groebner_basis(elements: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Check the Buchberger postcondition: all S-polynomials reduce to zero."""
    for f, g in combinations(elements, 2):
        if not normal_form(spolynomial(f, g, order), elements, order).is_zero():
            return False
    return True


# -- derived operations ----------------------------------------------------------


def ideal_membership(f: Polynomial, ideal: Ideal) -> bool:
    """Whether f lies in the ideal (normal form vanishes)."""
    if not f.ring.same_variables(ideal.ring):
        raise RingMismatchError("membership test across different rings")
    if f.is_zero():
        return True
    basis = groebner_basis(ideal)
    field_ring = basis.elements[0].ring if basis.elements else None
    if field_ring is not None and not f.ring.coefficients.is_field:
        f = transport(f, field_ring)
    if not basis.elements:
        return False
    return normal_form(f, basis.elements, basis.order).is_zero()


def is_unit_ideal(ideal: Ideal) -> bool:
    """Whether the reduced basis is {1}; over a field this certifies an empty
    vanishing locus over the algebraic closure."""
    elements = reduced_basis(ideal)
    return len(elements) == 1 and elements[0].is_constant()


def eliminate(ideal: Ideal, drop: Iterable[str]) -> Ideal:
    """Generators of the intersection with the subring omitting ``drop``,
    computed with a block elimination order."""
    drop = list(dict.fromkeys(drop))
    field_ideal, ring = _field_lift(ideal)
    for name in drop:
        ring.index(name)
    if not drop:
        return Ideal(ring, reduced_basis(field_ideal))
    kept = [v for v in ring.variables if v not in set(drop)]
    work_ring = PolynomialRing(
        ring.coefficients, tuple(drop) + tuple(kept), elimination_order(len(drop))
    )
    moved = Ideal(work_ring, [transport(g, work_ring) for g in field_ideal.generators])
    target = PolynomialRing(ring.coefficients, kept, ring.order)
    survivors = []
    dropped = set(drop)
    for g in reduced_basis(moved, work_ring.order):
        if g.variables_present().isdisjoint(dropped):
            survivors.append(transport(g, target))
    return Ideal(target, survivors)


def saturate(ideal: Ideal, f: Polynomial) -> Ideal:
    """(I : f^infinity) via the Rabinowitsch trick: adjoin w with 1 - w*f and
    eliminate w."""
    if f.is_zero():
        raise PolynomialError("cannot saturate by the zero polynomial")
    field_ideal, ring = _field_lift(ideal)
    if not f.ring.same_variables(ideal.ring):
        raise RingMismatchError("saturation element in a different ring")
    f = transport(f, ring)
    w = _fresh_name("w", ring.variables)
    extended = ring.extend([w])
    gens = [transport(g, extended) for g in field_ideal.generators]
    gens.append(extended.one - extended.var(w) * transport(f, extended))
    eliminated = eliminate(Ideal(extended, gens), [w])
    return Ideal(ring, [transport(g, ring) for g in eliminated.generators])


def krull_dimension(ideal: Ideal):
    """Dimension of the quotient ring, or EMPTY for the unit ideal.

    Computed combinatorially: the largest cardinality of a variable subset
    meeting the support of no leading monomial of a grevlex basis."""
    field_ideal, ring = _field_lift(ideal)
    elements = reduced_basis(field_ideal, GREVLEX)
    if len(elements) == 1 and elements[0].is_constant():
        return EMPTY
    supports = []
    for g in elements:
        lm, _ = g.leading(GREVLEX)
        supports.append(frozenset(i for i, e in enumerate(lm) if e))
    n = ring.arity
    best = 0
    for size in range(n, 0, -1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if all(not s <= chosen for s in supports):
                return size
    return best


def jacobian_minors_ideal(
    gens: Sequence[Polynomial], variables: Sequence[str], size: int
) -> Ideal:
    """Ideal of all size-by-size minors of the matrix d(gens_i)/d(vars_j)."""
    if not gens:
        raise PolynomialError("need at least one polynomial")
    ring = gens[0].ring
    if not 1 <= size <= min(len(gens), len(variables)):
        raise PolynomialError("minor size out of range")
    matrix = [[g.partial_derivative(v) for v in variables] for g in gens]
    minors = []
    for rows in combinations(range(len(gens)), size):
        for cols in combinations(range(len(variables)), size):
            sub = [[matrix[r][c] for c in cols] for r in rows]
            minors.append(poly_determinant(sub))
    return Ideal(ring, minors)


def _fresh_name(base: str, taken: Sequence[str]) -> str:
    name = base
    while name in taken:
        name += "_"
    return name
