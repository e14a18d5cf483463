"""Exact coefficient rings: the integers, the rationals, and prime fields.

All three are integral domains, so "nonzero" and "non-zero-divisor" coincide.
Elements are plain Python values: ``int`` for Z and F_p (reduced to [0, p)),
``fractions.Fraction`` for Q.  Every operation is exact; no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


class CoefficientRingError(ValueError):
    """Raised for invalid ring construction or non-invertible elements."""


class CoefficientRing:
    """Base class for the supported coefficient domains."""

    name: str
    is_field: bool
    characteristic: int

    def normalize(self, value):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def invert(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_unit(self, a) -> bool:
        try:
            self.invert(a)
        except CoefficientRingError:
            return False
        return True

    @property
    def zero(self):
        return self.normalize(0)

    @property
    def one(self):
        return self.normalize(1)

    def mul_int(self, a, n: int):
        """a times an integer scalar (used by formal derivatives)."""
        return self.mul(a, self.normalize(n))

    def __repr__(self):
        return self.name


class Integers(CoefficientRing):
    name = "Z"
    is_field = False
    characteristic = 0

    def normalize(self, value):
        if isinstance(value, bool):
            raise CoefficientRingError("booleans are not ring elements")
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return int(value)
            raise CoefficientRingError(f"{value} is not an integer")
        raise CoefficientRingError(f"cannot interpret {value!r} in Z")

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def invert(self, a):
        if a in (1, -1):
            return a
        raise CoefficientRingError(f"{a} is not a unit in Z")

    def __eq__(self, other):
        return isinstance(other, Integers)

    def __hash__(self):
        return hash("ring:Z")


class Rationals(CoefficientRing):
    name = "Q"
    is_field = True
    characteristic = 0

    def normalize(self, value):
        if isinstance(value, bool):
            raise CoefficientRingError("booleans are not ring elements")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise CoefficientRingError(f"cannot interpret {value!r} in Q")

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def invert(self, a):
        if a == 0:
            raise CoefficientRingError("0 is not invertible")
        return 1 / Fraction(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("ring:Q")


class PrimeField(CoefficientRing):
    is_field = True

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2 or not _is_prime(p):
            raise CoefficientRingError(f"modulus {p!r} is not prime")
        self.p = p
        self.name = f"F{p}"
        self.characteristic = p

    def normalize(self, value):
        if isinstance(value, bool):
            raise CoefficientRingError("booleans are not ring elements")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise CoefficientRingError(
                    f"denominator of {value} vanishes mod {self.p}"
                )
            return value.numerator * pow(den, -1, self.p) % self.p
        raise CoefficientRingError(f"cannot interpret {value!r} in {self.name}")

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def invert(self, a):
        a %= self.p
        if a == 0:
            raise CoefficientRingError(f"0 is not invertible in {self.name}")
        return pow(a, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("ring:Fp", self.p))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


ZZ = Integers()
QQ = Rationals()

_GF_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """The prime field with p elements (p must be prime)."""
    field = _GF_CACHE.get(p)
    if field is None:
        field = PrimeField(p)
        _GF_CACHE[p] = field
    return field


def coerce(value, source: CoefficientRing, target: CoefficientRing):
    """Move an element between coefficient rings where a canonical map exists.

    Supported maps: identity, Z -> Q, Z -> F_p, Q -> F_p (denominator must be
    invertible), Q -> Z (integral values only).
    """
    if source == target:
        return target.normalize(value)
    if isinstance(source, Integers):
        return target.normalize(value)
    if isinstance(source, Rationals):
        return target.normalize(value)
    raise CoefficientRingError(f"no canonical map {source} -> {target}")
