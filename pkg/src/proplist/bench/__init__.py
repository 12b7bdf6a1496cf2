"""Benchmark harness reproducing the three-operation script experiment."""

from .report import emit_report, load_table4, parse_csv, table4_csv
from .runner import (
    BenchReport,
    CellStats,
    check_workload,
    observation_one,
    run_bench,
    run_script,
)
from .scripts import MNEMONICS, SCRIPTS, OpScript, parse_scripts
from .stats import FTestResult, anova_f
from .workload import Workload, generate_workload

__all__ = [
    "BenchReport", "CellStats", "FTestResult", "MNEMONICS", "OpScript", "SCRIPTS",
    "Workload", "anova_f", "check_workload", "emit_report", "generate_workload",
    "load_table4", "observation_one", "parse_csv", "parse_scripts", "run_bench",
    "run_script", "table4_csv",
]
