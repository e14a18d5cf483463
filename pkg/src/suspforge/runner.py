"""Execute job files into report documents.

Mathematical failures become failing task entries and execution continues;
unresolvable names and malformed arguments raise JobError (exit 2 at the
CLI), and blowing the enumeration budget raises BudgetExceededError (exit 3).
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import (
    ConstructionError,
    FamilySpec,
    builtin_seeds,
    danielewski_family,
    iterated_suspension,
    quasi_affine_contractible,
)
from .counting import DEFAULT_BUDGET, count_points_bruteforce
from .jobs import JobError, JobFile, Task, int_arg, int_list_arg, poly_list_arg
from .report import ReportDocument, TaskResult, presentation_json, print_presentation
from .schemes import AffinePresentation
from .verify import DEFAULT_PRIMES, predicted_count_family, verify_family


@dataclass(frozen=True)
class RunOptions:
    primes: tuple[int, ...] = DEFAULT_PRIMES
    budget: int = DEFAULT_BUDGET
    format: str = "json"
    seed: int = 0


def _presentation_payload(X) -> dict:
    return {"presentation": presentation_json(X)}


def _family_spec(job: JobFile, task: Task) -> FamilySpec:
    gens = poly_list_arg(job, task, "gens")
    roots = poly_list_arg(job, task, "roots")
    try:
        return FamilySpec(tuple(gens), tuple(roots))
    except ConstructionError as exc:
        raise JobError(str(exc), job.path, task.line) from None


def _run_task(job: JobFile, task: Task, options: RunOptions) -> TaskResult:
    if task.op == "seeds":
        payload = {
            "presentations": {
                name: presentation_json(X) for name, X in builtin_seeds().items()
            }
        }
        return TaskResult(task.name, task.op, "pass", payload)

    if task.op == "suspend":
        ref = task.args.get("of")
        if ref is None:
            raise JobError("suspend needs of=SEED", job.path, task.line)
        seeds = builtin_seeds()
        if ref not in seeds:
            raise JobError(
                f"unknown seed {ref!r} (have: {', '.join(sorted(seeds))})",
                job.path,
                task.line,
            )
        times = int_arg(job, task, "times", 1)
        if times < 0:
            raise JobError("times must be non-negative", job.path, task.line)
        try:
            result = iterated_suspension(seeds[ref], times)
        except ConstructionError as exc:
            raise JobError(str(exc), job.path, task.line) from None
        payload = _presentation_payload(result.space)
        payload["of"] = ref
        payload["times"] = times
        payload["parameter_vars"] = list(result.parameter_vars)
        payload["torsor_vars"] = list(result.torsor_vars)
        return TaskResult(task.name, task.op, "pass", payload)

    if task.op == "family":
        spec = _family_spec(job, task)
        return TaskResult(
            task.name, task.op, "pass", _presentation_payload(danielewski_family(spec))
        )

    if task.op == "quasi-affine":
        spec = _family_spec(job, task)
        j = int_arg(job, task, "j")
        try:
            X = quasi_affine_contractible(spec, j)
        except ConstructionError as exc:
            raise JobError(str(exc), job.path, task.line) from None
        return TaskResult(task.name, task.op, "pass", _presentation_payload(X))

    if task.op == "verify":
        spec = _family_spec(job, task)
        primes = int_list_arg(job, task, "primes", options.primes)
        budget = int_arg(job, task, "budget", options.budget)
        report = verify_family(spec, primes=primes, budget=budget)
        status = "pass" if report.overall == "pass" else "fail"
        return TaskResult(task.name, task.op, status, report.to_json_dict())

    if task.op == "count":
        spec = _family_spec(job, task)
        primes = int_list_arg(job, task, "primes", options.primes)
        budget = int_arg(job, task, "budget", options.budget)
        X = danielewski_family(spec)
        entries = []
        status = "pass"
        for p in primes:
            brute = count_points_bruteforce(X, p, budget)
            try:
                predicted = predicted_count_family(spec, p, budget)
            except ConstructionError as exc:
                entries.append(
                    {"prime": p, "brute_force": brute, "predicted": None,
                     "note": str(exc)}
                )
                continue
            entries.append(
                {"prime": p, "brute_force": brute, "predicted": predicted}
            )
            if brute != predicted:
                status = "fail"
        return TaskResult(task.name, task.op, status, {"counts": entries})

    raise JobError(f"unknown op {task.op!r}", job.path, task.line)


def run_job(job: JobFile, options: RunOptions) -> ReportDocument:
    tasks = tuple(_run_task(job, task, options) for task in job.tasks)
    doc_options = {
        "primes": ",".join(str(p) for p in options.primes),
        "budget": options.budget,
        "format": options.format,
        "seed": options.seed,
    }
    return ReportDocument(job.path, job.text, doc_options, tasks)
