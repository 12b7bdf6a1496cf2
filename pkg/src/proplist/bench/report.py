"""Render and re-read benchmark reports (CSV and markdown)."""

from __future__ import annotations

import csv
import io
import math
from importlib import resources

from ..core import TABLE_ORDER, BackendKind
from .runner import BenchReport, CellStats
from .scripts import SCRIPTS

CSV_COLUMNS = ("script", "backend", "mean_ns", "median_ns", "stddev_ns")
FORMATS = ("csv", "md")


class ReportFormatError(ValueError):
    pass


def _num(x: float) -> str:
    return "" if math.isnan(x) else repr(float(x))


def to_csv(report: BenchReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for script in report.scripts:
        for kind in report.backends:
            cell = report.cells[script.mnemonic, kind]
            writer.writerow([script.mnemonic, kind.value, _num(cell.mean_ns),
                             _num(cell.median_ns), _num(cell.stddev_ns)])
    return buf.getvalue()


def to_markdown(report: BenchReport, *, with_f_test: bool = True) -> str:
    head = ["Row", "Operations"] + [b.title for b in report.backends]
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    for row, script in enumerate(report.scripts if report.backends else (), 1):
        vals = [f"{report.cells[script.mnemonic, b].mean_ns:.1f}" for b in report.backends]
        lines.append("| " + " | ".join([str(row), script.label] + vals) + " |")
    if report.backends and report.scripts:
        avg = [f"{report.average(b):.3f}" for b in report.backends]
        lines.append("| " + " | ".join(["", "The Average Time"] + avg) + " |")
    out = "\n".join(lines) + "\n"
    if with_f_test:
        result = report.f_test()
        if result is not None:
            out += f"\nOne-way ANOVA over backend script means: {result.summary()}\n"
    return out


def emit_report(report: BenchReport, fmt: str = "md") -> str:
    """Mean nanoseconds per script, one column per backend."""
    if fmt == "csv":
        return to_csv(report)
    if fmt in ("md", "markdown"):
        return to_markdown(report)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _float(text: str, line: int, column: str) -> float:
    if text.strip() == "":
        if column == "mean_ns":
            raise ReportFormatError(f"line {line}, column {column}: value required")
        return math.nan
    try:
        return float(text)
    except ValueError:
        raise ReportFormatError(f"line {line}, column {column}: not a number: {text!r}") from None


def parse_csv(text: str) -> BenchReport:
    """Inverse of ``to_csv``; the grid of scripts x backends must be complete."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ReportFormatError("line 1: empty input") from None
    if tuple(h.strip() for h in header) != CSV_COLUMNS:
        raise ReportFormatError(f"line 1: expected header {','.join(CSV_COLUMNS)}, got {','.join(header)}")

    scripts: list[str] = []
    backends: set[BackendKind] = set()
    cells: dict[tuple[str, BackendKind], CellStats] = {}
    for line, row in enumerate(reader, 2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != len(CSV_COLUMNS):
            raise ReportFormatError(f"line {line}: expected {len(CSV_COLUMNS)} columns, got {len(row)}")
        mnemonic = row[0].strip().upper()
        if mnemonic not in SCRIPTS:
            raise ReportFormatError(f"line {line}, column script: unknown mnemonic {row[0]!r}")
        try:
            kind = BackendKind.parse(row[1])
        except ValueError:
            raise ReportFormatError(f"line {line}, column backend: unknown backend {row[1]!r}") from None
        if (mnemonic, kind) in cells:
            raise ReportFormatError(f"line {line}: duplicate row for {mnemonic}/{kind.value}")
        mean, median, stddev = (_float(row[i], line, CSV_COLUMNS[i]) for i in (2, 3, 4))
        cells[mnemonic, kind] = CellStats(None, mean, median, stddev)
        if mnemonic not in scripts:
            scripts.append(mnemonic)
        backends.add(kind)

    ordered = sorted(backends, key=TABLE_ORDER.index)
    for m in scripts:
        for b in ordered:
            if (m, b) not in cells:
                raise ReportFormatError(f"missing row for script {m}, backend {b.value}")
    return BenchReport([SCRIPTS[m] for m in scripts], ordered, cells)


def table4_csv() -> str:
    """The published per-script times (converted to ns) in CSV form."""
    return resources.files("proplist.data").joinpath("table4.csv").read_text()


def load_table4() -> BenchReport:
    return parse_csv(table4_csv())
