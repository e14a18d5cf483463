"""Exact multivariate polynomials over Z, Q, and prime fields.

A polynomial is a mapping from exponent tuples to nonzero coefficients.
All values are immutable after construction and every operation is pure,
so polynomials are safe to share freely.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .orders import GREVLEX, MonomialOrder
from .rings import CoefficientRing, CoefficientRingError, QQ, ZZ, coerce

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


class PolynomialError(ValueError):
    pass


class PolynomialRing:
    """A polynomial ring: coefficient domain, ordered variables, monomial order."""

    __slots__ = ("coefficients", "variables", "order", "_index", "_hash")

    def __init__(
        self,
        coefficients: CoefficientRing,
        variables: Sequence[str],
        order: MonomialOrder = GREVLEX,
    ):
        variables = tuple(variables)
        seen = set()
        for name in variables:
            if not _NAME_RE.match(name):
                raise PolynomialError(f"invalid variable name {name!r}")
            if name in seen:
                raise PolynomialError(f"duplicate variable name {name!r}")
            seen.add(name)
        if order.kind == "block" and not 0 <= order.split <= len(variables):
            raise PolynomialError("block split index out of bounds")
        object.__setattr__(self, "coefficients", coefficients)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(variables)})
        object.__setattr__(
            self, "_hash", hash((coefficients, variables, order))
        )

    def __setattr__(self, name, value):
        raise AttributeError("PolynomialRing is immutable")

    @property
    def arity(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise PolynomialError(f"unknown variable {name!r}") from None

    def from_terms(self, terms: Mapping[tuple, object]) -> "Polynomial":
        clean = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != self.arity or any(
                not isinstance(e, int) or e < 0 for e in exps
            ):
                raise PolynomialError(f"bad exponent tuple {exps!r}")
            value = self.coefficients.normalize(coeff)
            if value == self.coefficients.zero:
                continue
            if exps in clean:
                raise PolynomialError("duplicate monomial in term mapping")
            clean[exps] = value
        return Polynomial(self, clean)

    def const(self, value) -> "Polynomial":
        value = self.coefficients.normalize(value)
        if value == self.coefficients.zero:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.arity: value})

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def var(self, name: str) -> "Polynomial":
        i = self.index(name)
        exps = tuple(1 if j == i else 0 for j in range(self.arity))
        return Polynomial(self, {exps: self.coefficients.one})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(v) for v in self.variables)

    def parse(self, text: str) -> "Polynomial":
        from .parsing import parse_polynomial

        return parse_polynomial(text, self)

    def with_order(self, order: MonomialOrder) -> "PolynomialRing":
        if order == self.order:
            return self
        return PolynomialRing(self.coefficients, self.variables, order)

    def with_coefficients(self, coefficients: CoefficientRing) -> "PolynomialRing":
        if coefficients == self.coefficients:
            return self
        return PolynomialRing(coefficients, self.variables, self.order)

    def extend(self, new_variables: Sequence[str]) -> "PolynomialRing":
        return PolynomialRing(
            self.coefficients, self.variables + tuple(new_variables), self.order
        )

    def without(self, names: Iterable[str]) -> "PolynomialRing":
        gone = set(names)
        for name in gone:
            self.index(name)
        kept = tuple(v for v in self.variables if v not in gone)
        return PolynomialRing(self.coefficients, kept, self.order)

    def same_variables(self, other: "PolynomialRing") -> bool:
        return (
            self.coefficients == other.coefficients
            and self.variables == other.variables
        )

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and self.coefficients == other.coefficients
            and self.variables == other.variables
            and self.order == other.order
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{self.coefficients.name}[{', '.join(self.variables)}]"


class Polynomial:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: dict):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        zero = (0,) * self.ring.arity
        return not self.terms or set(self.terms) == {zero}

    def constant_value(self):
        """The constant coefficient; for constant polynomials this is the value."""
        zero = (0,) * self.ring.arity
        return self.terms.get(zero, self.ring.coefficients.zero)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        i = self.ring.index(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def sorted_terms(self, order: MonomialOrder | None = None):
        """Terms in descending monomial order (the ring's order by default)."""
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading(self, order: MonomialOrder | None = None):
        """(exponents, coefficient) of the leading term; error on zero."""
        if not self.terms:
            raise PolynomialError("the zero polynomial has no leading term")
        key = (order or self.ring.order).key
        exps = max(self.terms, key=key)
        return exps, self.terms[exps]

    def variables_present(self) -> frozenset[str]:
        names = self.ring.variables
        present = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    present.add(names[i])
        return frozenset(present)

    # -- arithmetic --------------------------------------------------------

    def _coerce_operand(self, other):
        if isinstance(other, Polynomial):
            if not self.ring.same_variables(other.ring):
                raise RingMismatchError(
                    f"operands in different rings: {self.ring} vs {other.ring}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        coeffs = self.ring.coefficients
        merged = dict(self.terms)
        for exps, c in other.terms.items():
            total = coeffs.add(merged.get(exps, coeffs.zero), c)
            if total == coeffs.zero:
                merged.pop(exps, None)
            else:
                merged[exps] = total
        return Polynomial(self.ring, merged)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.coefficients.neg
        return Polynomial(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        coeffs = self.ring.coefficients
        product: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                value = coeffs.add(
                    product.get(exps, coeffs.zero), coeffs.mul(c1, c2)
                )
                if value == coeffs.zero:
                    product.pop(exps, None)
                else:
                    product[exps] = value
        return Polynomial(self.ring, product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise PolynomialError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, value) -> "Polynomial":
        """Multiply by a coefficient-ring scalar."""
        coeffs = self.ring.coefficients
        value = coeffs.normalize(value)
        if value == coeffs.zero:
            return self.ring.zero
        return Polynomial(
            self.ring, {e: coeffs.mul(c, value) for e, c in self.terms.items()}
        )

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        """Divide by the leading coefficient (field coefficients only)."""
        _, lc = self.leading(order)
        return self.scale(self.ring.coefficients.invert(lc))

    # -- calculus and specialization ----------------------------------------

    def partial_derivative(self, var: str) -> "Polynomial":
        i = self.ring.index(var)
        coeffs = self.ring.coefficients
        out: dict = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            value = coeffs.mul_int(c, e)
            if value == coeffs.zero:
                continue
            lowered = exps[:i] + (e - 1,) + exps[i + 1 :]
            out[lowered] = coeffs.add(out.get(lowered, coeffs.zero), value)
            if out[lowered] == coeffs.zero:
                del out[lowered]
        return Polynomial(self.ring, out)

    def evaluate(self, point: Mapping[str, object]):
        """Exact evaluation at a full assignment of coefficient-ring values."""
        coeffs = self.ring.coefficients
        values = []
        for name in self.ring.variables:
            if name not in point:
                raise PolynomialError(f"missing assignment for variable {name!r}")
            values.append(coeffs.normalize(point[name]))
        total = coeffs.zero
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(values, exps):
                for _ in range(e):
                    term = coeffs.mul(term, v)
            total = coeffs.add(total, term)
        return total

    def substitute(
        self,
        assignment: Mapping[str, object],
        into: PolynomialRing | None = None,
    ) -> "Polynomial":
        """Simultaneous substitution; unassigned variables pass through.

        Values may be polynomials in the target ring or coefficient scalars.
        The target ring must share the coefficient ring and contain every
        unassigned variable.
        """
        target = into or self.ring
        if target.coefficients != self.ring.coefficients:
            raise RingMismatchError(
                "substitution target has incompatible coefficients"
            )
        images = []
        for name in self.ring.variables:
            if name in assignment:
                value = assignment[name]
                if isinstance(value, Polynomial):
                    if value.ring != target and not value.ring.same_variables(target):
                        raise RingMismatchError(
                            "substituted polynomial lives in a different ring"
                        )
                    images.append(Polynomial(target, dict(value.terms)))
                else:
                    images.append(target.const(value))
            else:
                images.append(target.var(name))  # raises if absent from target
        for name in assignment:
            self.ring.index(name)
        result = target.zero
        for exps, c in self.terms.items():
            term = target.const(c)
            for img, e in zip(images, exps):
                if e:
                    term = term * img**e
            result = result + term
        return result

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                return self == self.ring.const(other)
            return NotImplemented
        return self.ring.same_variables(other.ring) and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(
                (
                    self.ring.coefficients,
                    self.ring.variables,
                    frozenset(self.terms.items()),
                )
            )
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        from .parsing import format_polynomial

        return format_polynomial(self)

    def __repr__(self):
        return f"<{self} in {self.ring}>"


# -- transport between rings -------------------------------------------------


def transport(
    f: Polynomial,
    target: PolynomialRing,
    rename: Mapping[str, str] | None = None,
) -> Polynomial:
    """Re-express ``f`` in ``target``: coefficients move along the canonical
    map (identity, Z->Q, Z->F_p, Q->F_p) and variables map by name, or by
    ``rename`` where given.  Every source variable must land in ``target``.
    """
    rename = rename or {}
    present = f.variables_present()
    positions: list[int | None] = []
    for name in f.ring.variables:
        mapped = rename.get(name, name)
        if name in present or mapped in target.variables:
            positions.append(target.index(mapped))
        else:
            positions.append(None)  # absent from f, allowed to drop
    src = f.ring.coefficients
    dst = target.coefficients
    out: dict = {}
    for exps, c in f.terms.items():
        image = [0] * target.arity
        for pos, e in zip(positions, exps):
            if e:
                image[pos] += e
        value = coerce(c, src, dst)
        key = tuple(image)
        total = dst.add(out.get(key, dst.zero), value)
        if total == dst.zero:
            out.pop(key, None)
        else:
            out[key] = total
    return Polynomial(target, out)


# -- resultants and discriminants ---------------------------------------------


def poly_determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant of a square matrix of polynomials (expansion by first row)."""
    n = len(matrix)
    if n == 0:
        raise PolynomialError("empty matrix")
    ring = matrix[0][0].ring
    if any(len(row) != n for row in matrix):
        raise PolynomialError("matrix is not square")

    def expand(rows: tuple[int, ...], cols: tuple[int, ...]) -> Polynomial:
        if len(rows) == 1:
            return matrix[rows[0]][cols[0]]
        r = rows[0]
        total = ring.zero
        for k, c in enumerate(cols):
            entry = matrix[r][c]
            if entry.is_zero():
                continue
            minor = expand(rows[1:], cols[:k] + cols[k + 1 :])
            term = entry * minor
            total = total - term if k % 2 else total + term
        return total

    idx = tuple(range(n))
    return expand(idx, idx)


def coefficients_in(f: Polynomial, var: str) -> list[Polynomial]:
    """Coefficients of f as a polynomial in ``var``, descending from the top
    degree; entries are polynomials in the same ring with ``var``-degree 0."""
    i = f.ring.index(var)
    d = f.degree_in(var)
    if d < 0:
        return []
    buckets: list[dict] = [dict() for _ in range(d + 1)]
    for exps, c in f.terms.items():
        e = exps[i]
        stripped = exps[:i] + (0,) + exps[i + 1 :]
        buckets[e][stripped] = c
    return [Polynomial(f.ring, buckets[d - k]) for k in range(d + 1)]


def resultant(p: Polynomial, q: Polynomial, var: str) -> Polynomial:
    """Sylvester resultant with respect to ``var``.

    The matrix stacks deg(p) shifted rows of q's coefficient vector above
    deg(q) shifted rows of p's; the result is the determinant, a polynomial
    in the remaining variables.
    """
    if p.is_zero() or q.is_zero():
        raise PolynomialError("resultant of the zero polynomial")
    ring = p.ring
    if not ring.same_variables(q.ring):
        raise RingMismatchError("resultant operands in different rings")
    m = p.degree_in(var)
    n = q.degree_in(var)
    if m <= 0 and n <= 0:
        raise PolynomialError(f"variable {var!r} absent from both inputs")
    reduced = ring.without([var])
    if m == 0:
        return transport(p, reduced) ** n
    if n == 0:
        return transport(q, reduced) ** m
    pc = coefficients_in(p, var)
    qc = coefficients_in(q, var)
    size = m + n
    zero = ring.zero
    rows = []
    for shift in range(m):  # rows of q
        row = [zero] * size
        for k, c in enumerate(qc):
            row[shift + k] = c
        rows.append(row)
    for shift in range(n):  # rows of p
        row = [zero] * size
        for k, c in enumerate(pc):
            row[shift + k] = c
        rows.append(row)
    det = poly_determinant(rows)
    return transport(det, reduced)


def discriminant(P: Polynomial, var: str):
    """Discriminant of a monic polynomial in ``var``.

    Returns a coefficient-ring element when no other variables remain,
    otherwise a polynomial in the remaining variables.  Non-monic inputs are
    rejected.
    """
    d = P.degree_in(var)
    if d < 1:
        raise PolynomialError("discriminant needs positive degree")
    lead = coefficients_in(P, var)[0]
    if lead != P.ring.one:
        raise PolynomialError("discriminant requires a monic input")
    derivative = P.partial_derivative(var)
    if derivative.is_zero():  # positive characteristic dividing every exponent
        if P.ring.arity == 1:
            return P.ring.coefficients.zero
        return P.ring.without([var]).zero
    res = resultant(P, derivative, var)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    res = res.scale(sign)
    if res.ring.arity == 0:
        return res.constant_value()
    return res


def poly_from_roots(ring: PolynomialRing, var: str, roots: Sequence) -> Polynomial:
    """The monic product of (var - root) over the given roots.

    Roots may be coefficient scalars or polynomials in ``ring``.
    """
    z = ring.var(var)
    result = ring.one
    for root in roots:
        if isinstance(root, Polynomial):
            if not root.ring.same_variables(ring):
                root = transport(root, ring)
            result = result * (z - root)
        else:
            result = result * (z - ring.const(root))
    return result


class NotSplitError(PolynomialError):
    """The polynomial does not factor into linear terms over its coefficients."""


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def split_roots(P: Polynomial, var: str) -> list:
    """Roots of a monic polynomial that splits into linear factors, with
    multiplicity, found by deterministic deflation (not general factoring).

    Coefficients must be constants.  Over F_p every field element is tried;
    over Z and Q candidates come from the rational root theorem.
    """
    d = P.degree_in(var)
    if d < 1:
        raise PolynomialError("need positive degree to extract roots")
    coeffs = coefficients_in(P, var)
    if any(not c.is_constant() for c in coeffs):
        raise NotSplitError("coefficients must be constants")
    if coeffs[0] != P.ring.one:
        raise PolynomialError("root extraction requires a monic input")
    domain = P.ring.coefficients
    values = [c.constant_value() for c in coeffs]  # descending degree

    roots = []
    for _ in range(d):
        root = _find_root(values, domain)
        if root is None:
            raise NotSplitError("polynomial does not split over its coefficients")
        roots.append(root)
        # synthetic division by (var - root)
        new = [values[0]]
        for c in values[1:-1]:
            new.append(domain.add(c, domain.mul(new[-1], root)))
        values = new
    return roots


def _find_root(values, domain):
    def horner(x):
        acc = domain.zero
        for c in values:
            acc = domain.add(domain.mul(acc, x), c)
        return acc

    if domain.characteristic:
        for x in range(domain.characteristic):
            if horner(x) == domain.zero:
                return x
        return None
    # integer or rational coefficients; clear denominators first
    fracs = [Fraction(v) for v in values]
    den = 1
    for f in fracs:
        den = den * f.denominator // _gcd(den, f.denominator)
    ints = [int(f * den) for f in fracs]
    constant = ints[-1]
    if constant == 0:
        return domain.normalize(0)
    candidates = set()
    for num in _divisors(constant):
        for q in _divisors(den):
            for s in (1, -1):
                candidates.add(Fraction(s * num, q))
    for x in sorted(candidates, key=lambda f: (abs(f), f < 0)):
        try:
            value = domain.normalize(x)
        except CoefficientRingError:
            continue
        if horner(value) == domain.zero:
            return value
    return None


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a if a else 1
