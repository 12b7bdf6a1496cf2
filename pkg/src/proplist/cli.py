"""Command-line front end: ``bench``, ``run``, ``hash`` and ``ftest``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .backends import capacity_of, make_backend
from .bench.report import ReportFormatError, emit_report, parse_csv, table4_csv
from .bench.runner import (
    DEFAULT_REPETITIONS,
    DEFAULT_WARMUP,
    check_workload,
    observation_one,
    run_bench,
)
from .bench.scripts import parse_scripts
from .bench.workload import PRELOAD_MAX, PRELOAD_MIN, generate_workload
from .core import TABLE_ORDER, BackendKind, ErrorKind, InvalidNameError, apply_op
from .hashing import DEFAULT_TABLE_SIZE, midsquare_trace, pack_name
from .oracle import OracleStore, oracle_apply

log = logging.getLogger("proplist")


def parse_backends(text: str) -> list[BackendKind]:
    if text.strip().lower() == "all":
        return list(TABLE_ORDER)
    kinds = []
    for part in text.split(","):
        kind = BackendKind.parse(part)
        if kind not in kinds:
            kinds.append(kind)
    return kinds


def _type(parser):
    def convert(text):
        try:
            return parser(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    return convert


def _add_workload_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--preload-min", type=int, default=PRELOAD_MIN)
    p.add_argument("--preload-max", type=int, default=PRELOAD_MAX)
    p.add_argument("--word-width", type=int, choices=(32, 64), default=32)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="proplist", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bench", help="time the operation scripts on each backend")
    p.add_argument("--backends", type=_type(parse_backends), default="all")
    p.add_argument("--scripts", type=_type(parse_scripts), default="all")
    p.add_argument("--repetitions", type=int, default=DEFAULT_REPETITIONS)
    p.add_argument("--warmup", type=int, default=DEFAULT_WARMUP)
    p.add_argument("--format", choices=("md", "markdown", "csv"), default="md")
    p.add_argument("--out", type=Path, help="also write the report to this file")
    p.add_argument("--check", action="store_true",
                   help="replay every workload against the oracle before timing")
    _add_workload_flags(p)

    p = sub.add_parser("run", help="trace one script on one backend")
    p.add_argument("--backend", type=_type(BackendKind.parse), required=True)
    p.add_argument("--script", type=_type(parse_scripts), required=True)
    p.add_argument("--check", action="store_true", help="compare results with the oracle")
    _add_workload_flags(p)

    p = sub.add_parser("hash", help="print the mid-square hash intermediates of a name")
    p.add_argument("name")
    p.add_argument("--table-size", type=int, default=DEFAULT_TABLE_SIZE)

    p = sub.add_parser("ftest", help="one-way ANOVA over a bench CSV")
    p.add_argument("csv_path", nargs="?", type=Path)
    p.add_argument("--table4", action="store_true",
                   help="use the embedded published timings instead of a file")
    p.add_argument("--backends", type=_type(parse_backends), default=None,
                   help="restrict the comparison to these backends")
    return parser


def _workload_args_ok(args) -> Optional[str]:
    if not 3 <= args.preload_min <= args.preload_max:
        return "--preload-min must be >= 3 and <= --preload-max"
    return None


def cmd_bench(args) -> int:
    problem = _workload_args_ok(args)
    if problem is None and (args.repetitions < 1 or args.warmup < 0):
        problem = "--repetitions must be >= 1 and --warmup >= 0"
    if problem:
        print(f"proplist bench: {problem}", file=sys.stderr)
        return 2
    backends = args.backends if isinstance(args.backends, list) else parse_backends(args.backends)
    scripts = args.scripts if isinstance(args.scripts, list) else parse_scripts(args.scripts)

    if args.check:
        bad = 0
        for script in scripts:
            wl = generate_workload(args.seed, script, preload_min=args.preload_min,
                                   preload_max=args.preload_max)
            for kind in backends:
                if not check_workload(kind, wl, word_width=args.word_width):
                    bad += 1
                    print(f"oracle mismatch: {script.mnemonic} on {kind.value}", file=sys.stderr)
        if bad:
            return 1
        print(f"oracle: match ({len(scripts) * len(backends)} workloads)", file=sys.stderr)

    try:
        report = run_bench(backends, scripts, seed=args.seed, repetitions=args.repetitions,
                           warmup=args.warmup, preload_min=args.preload_min,
                           preload_max=args.preload_max, word_width=args.word_width)
    except Exception as exc:  # a compliant workload never errors
        print(f"proplist bench: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    fmt = "csv" if args.format == "csv" else "md"
    text = emit_report(report, fmt)
    ordering = observation_one(report)
    if fmt == "md" and ordering is not None:
        text += ordering[1] + "\n"
    elif fmt == "csv":
        result = report.f_test()
        if result is not None:
            print(f"One-way ANOVA over backend script means: {result.summary()}", file=sys.stderr)
        if ordering is not None:
            print(ordering[1], file=sys.stderr)
    sys.stdout.write(text)
    if args.out:
        args.out.write_text(text)
    return 0


def _show(result) -> str:
    if isinstance(result, ErrorKind):
        return f"error {result}"
    return "ok" if result is None else repr(result)


def cmd_run(args) -> int:
    problem = _workload_args_ok(args)
    if problem:
        print(f"proplist run: {problem}", file=sys.stderr)
        return 2
    if len(args.script) != 1:
        print("proplist run: give exactly one script mnemonic", file=sys.stderr)
        return 2
    script = args.script[0]
    kind = args.backend
    wl = generate_workload(args.seed, script, preload_min=args.preload_min,
                           preload_max=args.preload_max)
    plist = make_backend(kind, word_width=args.word_width)
    oracle = OracleStore(capacity_of(kind, word_width=args.word_width))
    print(f"backend {kind.title} ({kind.value}), script {script.label}, seed {args.seed}")
    failed = False
    mismatch = False
    for phase, ops in (("preload", wl.preload), ("script", wl.ops)):
        if phase == "preload":
            print(f"preload: {len(ops)} inserts")
        for op in ops:
            got = apply_op(plist, op)
            want = oracle_apply(oracle, op)
            if got != want:
                mismatch = True
            if isinstance(got, ErrorKind):
                failed = True
            if phase == "script" or isinstance(got, ErrorKind):
                print(f"  {phase:7s} {op} -> {_show(got)}")
    print(f"size: {plist.size()}")
    if args.check:
        print("oracle: match" if not mismatch else "oracle: MISMATCH")
    return 1 if failed or (args.check and mismatch) else 0


def cmd_hash(args) -> int:
    try:
        words = pack_name(args.name)
    except InvalidNameError as exc:
        print(f"proplist hash: invalid name: {exc}", file=sys.stderr)
        return 2
    try:
        t = midsquare_trace(words, args.table_size)
    except ValueError as exc:
        print(f"proplist hash: {exc}", file=sys.stderr)
        return 2
    print(f"a = {t.a:#010x}")
    print(f"b = {t.b:#010x}")
    print(f"c = {t.c:#018x}")
    print(f"d = {t.d:#010x}")
    print(f"e = {t.e:#018x}")
    print(f"centre = {t.centre:#010x}")
    print(f"index = {t.index}")
    return 0


def cmd_ftest(args) -> int:
    if args.table4 == (args.csv_path is not None):
        print("proplist ftest: give a CSV path or --table4", file=sys.stderr)
        return 2
    try:
        text = table4_csv() if args.table4 else args.csv_path.read_text()
        report = parse_csv(text)
    except (OSError, ReportFormatError) as exc:
        print(f"proplist ftest: {exc}", file=sys.stderr)
        return 2
    chosen = args.backends or report.backends
    missing = [b for b in chosen if b not in report.backends]
    if missing:
        print(f"proplist ftest: backend not in CSV: {', '.join(b.value for b in missing)}",
              file=sys.stderr)
        return 2
    for b in chosen:
        avg = report.average(b)
        print(f"{b.title:12s} mean {avg:.4f} ns ({avg / 1000:.6f} us) over {len(report.scripts)} scripts")
    try:
        result = report.f_test(chosen)
        if result is None:
            raise ValueError("need at least 2 backends and 2 scripts")
    except ValueError as exc:
        print(f"proplist ftest: {exc}", file=sys.stderr)
        return 2
    print(f"F = {result.F!r}")
    print(f"df = ({result.df_between}, {result.df_within})")
    print(f"p = {result.p_value:.6g} ({result.p_bracket})")
    print(f"significant_at_5pct = {result.significant_at_5pct}")
    return 0


COMMANDS = {"bench": cmd_bench, "run": cmd_run, "hash": cmd_hash, "ftest": cmd_ftest}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
