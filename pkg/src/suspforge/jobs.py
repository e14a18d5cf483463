"""Line-oriented job files.

Directives, one per line ('#' starts a comment):

    ring Z[x1, x2]
    let f = x1^2 - x2
    task NAME OP key=value ...

Ops: seeds | suspend | family | quasi-affine | verify | count.
Values are bare tokens (ints, names, comma lists like ``primes=2,3``) or
parenthesized expression lists like ``gens=(f, x1*x2 - 1)``; items of a list
are either a ``let`` name or an expression over the declared ring.
Definitions precede use and task names are unique.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .parsing import ParseError, parse_polynomial
from .polynomials import Polynomial, PolynomialRing
from .rings import GF, QQ, ZZ

OPS = ("seeds", "suspend", "family", "quasi-affine", "verify", "count")


class JobError(ValueError):
    """Job syntax or name-resolution problem, with file location."""

    def __init__(self, message: str, path: str = "<job>", line: int = 0):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


@dataclass(frozen=True)
class Task:
    name: str
    op: str
    args: dict[str, str]
    line: int


@dataclass(frozen=True)
class JobFile:
    path: str
    text: str
    ring: PolynomialRing | None
    lets: dict[str, Polynomial]
    tasks: tuple[Task, ...]


def _parse_ring_spec(spec: str, path: str, line: int) -> PolynomialRing:
    spec = spec.strip()
    if "[" not in spec or not spec.endswith("]"):
        raise JobError(f"bad ring spec {spec!r}", path, line)
    head, _, body = spec.partition("[")
    body = body[:-1]
    head = head.strip()
    if head == "Z":
        coeffs = ZZ
    elif head == "Q":
        coeffs = QQ
    elif head.startswith("F") and head[1:].isdigit():
        coeffs = GF(int(head[1:]))
    else:
        raise JobError(f"unknown coefficient ring {head!r}", path, line)
    names = [v.strip() for v in body.split(",") if v.strip()]
    try:
        return PolynomialRing(coeffs, names)
    except ValueError as exc:
        raise JobError(str(exc), path, line) from None


def _split_args(rest: str, path: str, line: int) -> dict[str, str]:
    """key=value pairs; a value may be a parenthesized group with spaces."""
    args: dict[str, str] = {}
    i = 0
    n = len(rest)
    while i < n:
        while i < n and rest[i].isspace():
            i += 1
        if i >= n:
            break
        start = i
        while i < n and rest[i] not in "= \t":
            i += 1
        key = rest[start:i]
        if i >= n or rest[i] != "=":
            raise JobError(f"expected key=value, got {key!r}", path, line)
        i += 1  # consume '='
        if i < n and rest[i] == "(":
            depth = 0
            vstart = i
            while i < n:
                if rest[i] == "(":
                    depth += 1
                elif rest[i] == ")":
                    depth -= 1
                    if depth == 0:
                        i += 1
                        break
                i += 1
            if depth != 0:
                raise JobError("unbalanced parentheses", path, line)
            value = rest[vstart:i]
        else:
            vstart = i
            while i < n and not rest[i].isspace():
                i += 1
            value = rest[vstart:i]
        if key in args:
            raise JobError(f"duplicate argument {key!r}", path, line)
        if not value:
            raise JobError(f"empty value for {key!r}", path, line)
        args[key] = value
    return args


def parse_job(text: str, path: str = "<job>") -> JobFile:
    ring: PolynomialRing | None = None
    lets: dict[str, Polynomial] = {}
    tasks: list[Task] = []
    names: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        directive, _, rest = line.partition(" ")
        rest = rest.strip()
        if directive == "ring":
            ring = _parse_ring_spec(rest, path, lineno)
        elif directive == "let":
            name, eq, expr = rest.partition("=")
            name = name.strip()
            expr = expr.strip()
            if not eq or not name or not expr:
                raise JobError("expected: let NAME = EXPR", path, lineno)
            if ring is None:
                raise JobError("let before any ring declaration", path, lineno)
            if name in lets or name in ring.variables:
                raise JobError(f"name {name!r} already defined", path, lineno)
            try:
                lets[name] = parse_polynomial(expr, ring)
            except ParseError as exc:
                raise JobError(str(exc), path, lineno) from None
        elif directive == "task":
            pieces = rest.split(None, 2)
            if len(pieces) < 2:
                raise JobError("expected: task NAME OP ...", path, lineno)
            name, op = pieces[0], pieces[1]
            if op not in OPS and op.replace("_", "-") not in OPS:
                raise JobError(f"unknown op {op!r}", path, lineno)
            if name in names:
                raise JobError(f"duplicate task name {name!r}", path, lineno)
            names.add(name)
            args = _split_args(pieces[2] if len(pieces) > 2 else "", path, lineno)
            tasks.append(Task(name, op.replace("_", "-"), args, lineno))
        else:
            raise JobError(f"unknown directive {directive!r}", path, lineno)
    return JobFile(path, text, ring, lets, tuple(tasks))


def load_job(path: str) -> JobFile:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_job(handle.read(), path)


# -- argument interpretation (shared by the runner) ---------------------------------


def poly_list_arg(
    job: JobFile, task: Task, key: str, required: bool = True
) -> list[Polynomial] | None:
    raw = task.args.get(key)
    if raw is None:
        if required:
            raise JobError(f"task needs {key}=(...)", job.path, task.line)
        return None
    if not (raw.startswith("(") and raw.endswith(")")):
        raise JobError(f"{key} must be a (...) list", job.path, task.line)
    if job.ring is None:
        raise JobError("task needs a ring declaration", job.path, task.line)
    items = _split_top_level(raw[1:-1])
    polys = []
    for item in items:
        item = item.strip()
        if item in job.lets:
            polys.append(job.lets[item])
            continue
        try:
            polys.append(parse_polynomial(item, job.ring))
        except ParseError as exc:
            raise JobError(
                f"in {key}: {exc}", job.path, task.line
            ) from None
    if not polys:
        raise JobError(f"{key} list is empty", job.path, task.line)
    return polys


def int_arg(job: JobFile, task: Task, key: str, default: int | None = None) -> int:
    raw = task.args.get(key)
    if raw is None:
        if default is None:
            raise JobError(f"task needs {key}=N", job.path, task.line)
        return default
    try:
        return int(raw)
    except ValueError:
        raise JobError(f"{key} must be an integer", job.path, task.line) from None


def int_list_arg(
    job: JobFile, task: Task, key: str, default: tuple[int, ...]
) -> tuple[int, ...]:
    raw = task.args.get(key)
    if raw is None:
        return default
    try:
        return tuple(int(v) for v in raw.split(",") if v)
    except ValueError:
        raise JobError(
            f"{key} must be a comma list of integers", job.path, task.line
        ) from None


def _split_top_level(body: str) -> list[str]:
    parts = []
    depth = 0
    current: list[str] = []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    tail = "".join(current)
    if tail.strip():
        parts.append(tail)
    return parts
