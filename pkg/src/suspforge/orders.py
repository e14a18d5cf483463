"""Monomial orders: lex, graded reverse lex, and block elimination orders.

An order exposes a ``key`` so that comparing keys with Python's tuple
comparison realizes the monomial comparison (larger key = larger monomial).
"""

from __future__ import annotations

from dataclasses import dataclass


def _grevlex_key(exponents):
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


@dataclass(frozen=True)
class MonomialOrder:
    kind: str  # "lex" | "grevlex" | "block"
    split: int = 0  # block orders only: size of the leading (eliminated) block

    def key(self, exponents):
        if self.kind == "grevlex":
            return _grevlex_key(exponents)
        if self.kind == "lex":
            return exponents
        return (
            _grevlex_key(exponents[: self.split]),
            _grevlex_key(exponents[self.split :]),
        )

    def __repr__(self):
        if self.kind == "block":
            return f"block({self.split})"
        return self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def elimination_order(split: int) -> MonomialOrder:
    """Block order whose first block (the first ``split`` variables) is
    eliminated: any monomial meeting the first block beats any that does not."""
    if split < 0:
        raise ValueError("split index must be non-negative")
    return MonomialOrder("block", split)
