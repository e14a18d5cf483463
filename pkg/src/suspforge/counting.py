"""Brute-force point counting over prime fields.

The enumeration loop is the one genuinely hot path in the tool, so it lives
in a compiled extension when available; set ``SUSPFORGE_PURE=1`` to force the
pure-Python kernel.  ``benchmarks/bench_count.py`` compares the two.
"""

from __future__ import annotations

import os
from typing import Sequence

from .polynomials import Polynomial
from .rings import GF
from .schemes import AffinePresentation, QuasiAffinePresentation, reduce_presentation

if os.environ.get("SUSPFORGE_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND

DEFAULT_BUDGET = 10_000_000


class BudgetExceededError(RuntimeError):
    """The enumeration would evaluate more points than the budget allows."""


def compile_system(polys: Sequence[Polynomial], p: int):
    """Flatten polynomials over F_p into the kernel's (coeffs, exps) pairs."""
    out = []
    for f in polys:
        coeffs = []
        exps = []
        for e, c in sorted(f.terms.items()):
            coeffs.append(c % p)
            exps.extend(e)
        out.append((tuple(coeffs), tuple(exps)))
    return out


def count_points_bruteforce(
    X: AffinePresentation | QuasiAffinePresentation,
    p: int,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Exact number of F_p-points by full enumeration.

    Coefficients are reduced mod p first (Z and compatible Q values; an F_p
    presentation must match p).  Raises BudgetExceededError when p^arity
    exceeds the budget.
    """
    field = GF(p)
    if isinstance(X, QuasiAffinePresentation):
        ambient = reduce_presentation(X.ambient, field)
        removed_polys = [
            _reduce_poly(g, ambient.ring) for g in X.removed.generators
        ]
        removed = compile_system(removed_polys, p)
    else:
        ambient = reduce_presentation(X, field)
        removed = None
    arity = ambient.ring.arity
    if p**arity > budget:
        raise BudgetExceededError(
            f"{p}^{arity} points exceed the budget of {budget}"
        )
    system = compile_system(ambient.ideal.generators, p)
    return int(_impl.count_points(p, arity, system, removed))


def _reduce_poly(g: Polynomial, ring):
    from .polynomials import transport

    return transport(g, ring)
