"""The ``forge`` command line.

    forge run <job> [--primes 2,3,5] [--budget N] [--format text|json] [--seed S]
    forge seeds [--format text|json]
    forge suspend <seed> --times n [--format text|json]

Exit codes: 0 all tasks pass, 1 some check failed, 2 parse or name-resolution
error (with file location), 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .constructions import ConstructionError, builtin_seeds, iterated_suspension
from .counting import BudgetExceededError, DEFAULT_BUDGET
from .jobs import JobError, load_job
from .report import print_presentation
from .runner import RunOptions, run_job
from .verify import DEFAULT_PRIMES

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3


def _primes_arg(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in raw.split(",") if v)
    except ValueError:
        raise argparse.ArgumentTypeError("primes must be comma-separated integers")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forge",
        description="construct and verify deformation-space presentations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute a job file and print a report")
    run.add_argument("job", help="path to the job file")
    run.add_argument("--primes", type=_primes_arg, default=DEFAULT_PRIMES)
    run.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    run.add_argument("--format", choices=("text", "json"), default="json")
    run.add_argument("--seed", type=int, default=0,
                     help="recorded in the report; reserved for randomized tasks")

    seeds = sub.add_parser("seeds", help="print the built-in seed presentations")
    seeds.add_argument("--format", choices=("text", "json"), default="text")

    suspend = sub.add_parser("suspend", help="suspend a seed or a job task output")
    suspend.add_argument(
        "ref",
        help="seed name (see `forge seeds`) or JOBFILE#TASK naming a suspend task",
    )
    suspend.add_argument("--times", type=int, default=1)
    suspend.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _cmd_run(args) -> int:
    try:
        job = load_job(args.job)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except JobError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    options = RunOptions(
        primes=tuple(args.primes),
        budget=args.budget,
        format=args.format,
        seed=args.seed,
    )
    try:
        report = run_job(job, options)
    except JobError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    output = (
        report.render_json() if args.format == "json" else report.render_text()
    )
    sys.stdout.write(output)
    return EXIT_PASS if report.overall == "pass" else EXIT_FAIL


def _cmd_seeds(args) -> int:
    blocks = []
    for name, X in sorted(builtin_seeds().items()):
        blocks.append(f"# {name}")
        blocks.append(print_presentation(X, args.format))
    sys.stdout.write("\n".join(blocks) + "\n")
    return EXIT_PASS


def _resolve_suspend_ref(ref: str):
    """A seed name, or JOBFILE#TASK where TASK is a suspend task whose output
    gets suspended further (re-derived from its recorded seed and count)."""
    seeds = builtin_seeds()
    if "#" not in ref:
        if ref not in seeds:
            raise JobError(
                f"unknown seed {ref!r} (have: {', '.join(sorted(seeds))})"
            )
        return seeds[ref], 0
    path, _, task_name = ref.partition("#")
    job = load_job(path)
    for task in job.tasks:
        if task.name == task_name:
            if task.op != "suspend":
                raise JobError(
                    f"task {task_name!r} is {task.op!r}, not suspend",
                    job.path,
                    task.line,
                )
            of = task.args.get("of", "")
            if of not in seeds:
                raise JobError(f"unknown seed {of!r}", job.path, task.line)
            return seeds[of], int(task.args.get("times", "1"))
    raise JobError(f"no task named {task_name!r}", path)


def _cmd_suspend(args) -> int:
    if args.times < 0:
        print("error: --times must be non-negative", file=sys.stderr)
        return EXIT_PARSE
    try:
        seed, base_times = _resolve_suspend_ref(args.ref)
        result = iterated_suspension(seed, base_times + args.times)
    except (JobError, OSError, ConstructionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    sys.stdout.write(print_presentation(result.space, args.format) + "\n")
    return EXIT_PASS


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "seeds":
        return _cmd_seeds(args)
    return _cmd_suspend(args)


if __name__ == "__main__":
    sys.exit(main())
