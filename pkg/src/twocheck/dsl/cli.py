"""Command-line interface.

Commands: validate FILE, limit FILE --task NAME, lift FILE --task NAME,
enumerate-monads FILE --twocat NAME, suite FILE.  Exit codes: 0 all checks
pass, 1 a check failed (witness in the report), 2 input error.
"""

from __future__ import annotations

import argparse
import sys
import time

from .. import __version__, catlim
from ..errors import ElaborationError, ParseError, TwoCheckError
from .elaborate import TaskDecl, elaborate
from .parser import parse
from .report import Report, aggregate_json
from .runner import LIFT_KINDS, LIMIT_KINDS, run_task, _single


def _load(path):
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    return elaborate(parse(text))


def _emit(reports, args, duration):
    if getattr(args, "json", None):
        payload = aggregate_json(reports) if len(reports) != 1 else reports[0].to_json()
        with open(args.json, "w", encoding="utf-8") as handle:
            handle.write(payload + "\n")
    for report in reports:
        print(report.to_text(duration if getattr(args, "verbose", False) else None))
    failed = any(r.status in ("fail", "error") for r in reports)
    return 1 if failed else 0


def _probes(args):
    if not getattr(args, "probe_set", None):
        return None
    available = catlim.default_probes()
    chosen = {}
    for name in args.probe_set.split(","):
        name = name.strip()
        if name not in available:
            raise TwoCheckError(f"unknown probe {name!r}; available: {sorted(available)}")
        chosen[name] = available[name]
    return chosen


def main(argv=None):
    parser = argparse.ArgumentParser(prog="twocheck",
                                     description="verification engine for finite 2-monad theory")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("validate", "limit", "lift", "enumerate-monads", "suite"):
        cmd = sub.add_parser(name)
        cmd.add_argument("file")
        cmd.add_argument("--json", help="write the canonical JSON report to this path")
        cmd.add_argument("--budget", type=int, default=None, help="cell budget for constructions")
        cmd.add_argument("--probe-set", help="comma-separated Cat_fin probe names")
        cmd.add_argument("--verbose", action="store_true")
        if name in ("limit", "lift"):
            cmd.add_argument("--task", required=True)
        if name == "enumerate-monads":
            cmd.add_argument("--twocat", required=True)

    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        env = _load(args.file)
    except ParseError as exc:
        print(f"{args.file}:{exc.line}:{exc.column}: syntax error: {exc.message}", file=sys.stderr)
        if exc.expected:
            print(f"  expected: {', '.join(exc.expected)}", file=sys.stderr)
        return 2
    except ElaborationError as exc:
        line, col, *_ = exc.span
        print(f"{args.file}:{line}:{col}: {exc.message}", file=sys.stderr)
        return 2
    except (OSError, TwoCheckError) as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return 2

    try:
        probes = _probes(args)
    except TwoCheckError as exc:
        print(str(exc), file=sys.stderr)
        return 2

    if args.command == "validate":
        report = Report("validate", "pass", version=__version__)
        for name in env.order:
            report.add(f"declaration:{name}", "pass")
        report.statistics["declarations"] = len(env.order)
        return _emit([report], args, time.monotonic() - started)

    if args.command == "enumerate-monads":
        task = TaskDecl("enumerate-monads", {"kind": ["enumerate-monads"], "twocat": [args.twocat]}, None)
        report = run_task(env, task, budget=args.budget, probes=probes, version=__version__)
        return _emit([report], args, time.monotonic() - started)

    if args.command in ("limit", "lift"):
        if args.task not in env.tasks:
            print(f"unknown task {args.task!r}", file=sys.stderr)
            return 2
        task = env.tasks[args.task]
        kind = _single(task, "kind", "validate")
        wanted = LIMIT_KINDS if args.command == "limit" else LIFT_KINDS
        if kind not in wanted:
            print(f"task {args.task!r} has kind {kind!r}, not a {args.command} task", file=sys.stderr)
            return 2
        report = run_task(env, task, budget=args.budget, probes=probes, version=__version__)
        return _emit([report], args, time.monotonic() - started)

    if args.command == "suite":
        reports = [
            run_task(env, task, budget=args.budget, probes=probes, version=__version__)
            for task in env.task_list()
        ]
        if not reports:
            reports = [Report("suite", "pass", version=__version__)]
        summary = Report("summary", "pass", version=__version__)
        for report in reports:
            summary.add(report.task, report.status)
            if report.status in ("fail", "error"):
                summary.status = "fail"
        return _emit(reports + [summary], args, time.monotonic() - started)

    return 2


if __name__ == "__main__":
    sys.exit(main())
