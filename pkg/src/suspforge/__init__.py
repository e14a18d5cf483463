"""suspforge: exact polynomial presentations of deformation-space suspension
models, with Groebner-based hypothesis checks and finite-field point counts."""

__version__ = "0.1.0"

from .rings import GF, QQ, ZZ
from .orders import GREVLEX, LEX, elimination_order
from .polynomials import Polynomial, PolynomialRing

__all__ = [
    "GF",
    "QQ",
    "ZZ",
    "GREVLEX",
    "LEX",
    "elimination_order",
    "Polynomial",
    "PolynomialRing",
    "__version__",
]
