"""Deterministic rendering of presentations and run reports.

Text presentations round-trip through the expression grammar: generators over
Z and Q are printed in primitive integer form (an ideal-preserving rescale),
so parse(print(X)) recovers an ideal equal to X's.  JSON reports carry a
``schema`` version and contain no timestamps, so identical inputs produce
byte-identical documents.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .groebner import Ideal, ideal_membership, reduced_basis
from .orders import GREVLEX
from .parsing import format_generator, parse_polynomial
from .polynomials import Polynomial, PolynomialRing, transport
from .rings import GF, QQ, ZZ, Integers, PrimeField, Rationals
from .schemes import AffinePresentation, QuasiAffinePresentation, SchemeError

SCHEMA_VERSION = 1
TOOL_NAME = "suspforge"


class PresentationFormatError(ValueError):
    pass


# -- presentation printing ----------------------------------------------------------


def _ring_token(ring: PolynomialRing) -> str:
    return f"{ring.coefficients.name}[{', '.join(ring.variables)}]"


def _value_token(value) -> str:
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def print_presentation(
    X: AffinePresentation | QuasiAffinePresentation, format: str = "text"
) -> str:
    """Canonical rendering of a presentation; ``text`` or ``json``."""
    if format == "json":
        return json.dumps(presentation_json(X), sort_keys=True, indent=2)
    if format != "text":
        raise PresentationFormatError(f"unknown format {format!r}")
    ambient = X.ambient if isinstance(X, QuasiAffinePresentation) else X
    lines = [f"ring {_ring_token(ambient.ring)}"]
    gens = ", ".join(format_generator(g) for g in ambient.ideal.generators)
    lines.append(f"ideal ({gens})")
    if ambient.basepoint is not None:
        values = ", ".join(
            _value_token(v) for v in ambient.basepoint_tuple()
        )
        lines.append(f"point ({values})")
    if isinstance(X, QuasiAffinePresentation):
        removed = ", ".join(format_generator(g) for g in X.removed.generators)
        lines.append(f"removed ({removed})")
    return "\n".join(lines)


def presentation_json(
    X: AffinePresentation | QuasiAffinePresentation,
) -> dict:
    ambient = X.ambient if isinstance(X, QuasiAffinePresentation) else X
    doc: dict = {
        "ring": {
            "coefficients": ambient.ring.coefficients.name,
            "variables": list(ambient.ring.variables),
        },
        "generators": [format_generator(g) for g in ambient.ideal.generators],
        "basepoint": (
            None
            if ambient.basepoint is None
            else [_value_token(v) for v in ambient.basepoint_tuple()]
        ),
    }
    if ambient.provenance:
        doc["provenance"] = dict(sorted(ambient.provenance.items()))
    if isinstance(X, QuasiAffinePresentation):
        doc["removed"] = [format_generator(g) for g in X.removed.generators]
    return doc


_RING_RE = re.compile(r"\A(Z|Q|F(\d+))\[\s*([^\]]*)\]\Z")


def _parse_ring_token(token: str) -> PolynomialRing:
    match = _RING_RE.match(token.strip())
    if not match:
        raise PresentationFormatError(f"bad ring declaration {token!r}")
    if match.group(1) == "Z":
        coeffs = ZZ
    elif match.group(1) == "Q":
        coeffs = QQ
    else:
        coeffs = GF(int(match.group(2)))
    names = [v.strip() for v in match.group(3).split(",") if v.strip()]
    return PolynomialRing(coeffs, names)


def _split_list(body: str) -> list[str]:
    parts = []
    depth = 0
    current = []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    tail = "".join(current).strip()
    if tail:
        parts.append(tail)
    return [p for p in parts if p]


def _parse_value(token: str):
    if "/" in token:
        num, _, den = token.partition("/")
        return Fraction(int(num), int(den))
    return int(token)


def parse_presentation(
    text: str,
) -> AffinePresentation | QuasiAffinePresentation:
    """Inverse of the text format of ``print_presentation``."""
    ring = None
    gens: list[str] | None = None
    point: list | None = None
    removed: list[str] | None = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "ring":
            ring = _parse_ring_token(rest)
        elif keyword in ("ideal", "removed", "point"):
            if not (rest.startswith("(") and rest.endswith(")")):
                raise PresentationFormatError(f"expected a (...) list: {line!r}")
            body = rest[1:-1]
            if keyword == "ideal":
                gens = _split_list(body)
            elif keyword == "removed":
                removed = _split_list(body)
            else:
                point = [_parse_value(v) for v in _split_list(body)]
        else:
            raise PresentationFormatError(f"unknown directive {keyword!r}")
    if ring is None or gens is None:
        raise PresentationFormatError("presentation needs ring and ideal lines")
    ideal = Ideal(ring, [parse_polynomial(g, ring) for g in gens])
    basepoint = None
    if point is not None:
        if len(point) != ring.arity:
            raise PresentationFormatError("point arity mismatch")
        basepoint = dict(zip(ring.variables, point))
    ambient = AffinePresentation(ring, ideal, basepoint)
    if removed is None:
        return ambient
    removed_ideal = Ideal(ring, [parse_polynomial(g, ring) for g in removed])
    return QuasiAffinePresentation(ambient, removed_ideal)


# -- ideal-level comparison -----------------------------------------------------------


@dataclass(frozen=True)
class DiffVerdict:
    verdict: str  # "equal-as-strings" | "equal-as-ideals" | "different"
    witness: str | None = None

    def equal(self) -> bool:
        return self.verdict != "different"


def _comparison_field(a, b):
    if isinstance(a, PrimeField) or isinstance(b, PrimeField):
        if a != b:
            raise SchemeError(f"incompatible coefficient rings {a} and {b}")
        return a
    return QQ  # Z and Q mix: compare over the fraction field


def diff_presentations(
    A: AffinePresentation,
    B: AffinePresentation,
    renaming: dict[str, str] | None = None,
) -> DiffVerdict:
    """Compare two presentations as ideals after renaming A's variables onto
    B's.  The renaming (identity by default) must be a bijection onto B's
    variables.  String equality of the canonical generator lists is reported
    when it holds; otherwise reduced bases decide.
    """
    if renaming is None:
        renaming = {v: v for v in A.ring.variables}
    if set(renaming) != set(A.ring.variables) or sorted(
        renaming.values()
    ) != sorted(B.ring.variables):
        raise SchemeError("renaming is not a bijection onto B's variables")
    field = _comparison_field(A.ring.coefficients, B.ring.coefficients)
    target = B.ring.with_coefficients(field)
    moved = [transport(g, target, rename=renaming) for g in A.ideal.generators]
    b_gens = [transport(g, target) for g in B.ideal.generators]
    moved_strings = sorted(format_generator(g) for g in moved)
    b_strings = sorted(format_generator(g) for g in b_gens)
    if moved_strings == b_strings:
        return DiffVerdict("equal-as-strings")
    ideal_a = Ideal(target, moved)
    ideal_b = Ideal(target, b_gens)
    if ideal_a == ideal_b:
        return DiffVerdict("equal-as-ideals")
    for g in reduced_basis(ideal_a):
        if not ideal_membership(g, ideal_b):
            return DiffVerdict("different", format_generator(g))
    for g in reduced_basis(ideal_b):
        if not ideal_membership(g, ideal_a):
            return DiffVerdict("different", format_generator(g))
    return DiffVerdict("equal-as-ideals")  # pragma: no cover - exhaustive above


# -- run reports -----------------------------------------------------------------------


@dataclass(frozen=True)
class TaskResult:
    name: str
    op: str
    status: str  # pass | fail
    payload: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ReportDocument:
    job_path: str
    job_text: str
    options: dict
    tasks: tuple[TaskResult, ...]

    @property
    def overall(self) -> str:
        return "pass" if all(t.status == "pass" for t in self.tasks) else "fail"

    def to_json_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "tool": {"name": TOOL_NAME, "version": __version__},
            "job": {"path": self.job_path, "text": self.job_text},
            "options": dict(sorted(self.options.items())),
            "tasks": [
                {
                    "name": t.name,
                    "op": t.op,
                    "status": t.status,
                    "result": t.payload,
                }
                for t in sorted(self.tasks, key=lambda t: t.name)
            ],
            "overall": self.overall,
        }

    def render_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"

    def render_text(self) -> str:
        lines = [f"{TOOL_NAME} {__version__} report"]
        lines.append(f"job: {self.job_path}")
        opts = " ".join(f"{k}={v}" for k, v in sorted(self.options.items()))
        lines.append(f"options: {opts}")
        for t in sorted(self.tasks, key=lambda t: t.name):
            lines.append("")
            lines.append(f"== {t.name} ({t.op}): {t.status}")
            lines.extend(_payload_lines(t.payload, indent="  "))
        lines.append("")
        lines.append(f"overall: {self.overall}")
        return "\n".join(lines) + "\n"


def _payload_lines(value, indent="") -> list[str]:
    lines = []
    if isinstance(value, dict):
        for key in sorted(value):
            sub = value[key]
            if isinstance(sub, (dict, list)):
                lines.append(f"{indent}{key}:")
                lines.extend(_payload_lines(sub, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {sub}")
    elif isinstance(value, list):
        for sub in value:
            if isinstance(sub, dict):
                inner = _payload_lines(sub, indent + "  ")
                if inner:
                    first = inner[0].lstrip()
                    lines.append(f"{indent}- {first}")
                    lines.extend(inner[1:])
            elif isinstance(sub, list):
                lines.extend(_payload_lines(sub, indent + "  "))
            else:
                lines.append(f"{indent}- {sub}")
    else:
        lines.append(f"{indent}{value}")
    return lines
