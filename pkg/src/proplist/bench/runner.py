"""Timing harness: fresh backend per repetition, only the script is timed."""

from __future__ import annotations

import gc
import logging
import os
import statistics
from dataclasses import dataclass, field
from time import perf_counter_ns
from typing import Callable, Optional, Sequence

from ..backends import capacity_of, make_backend
from ..core import TABLE_ORDER, BackendKind, OpKind, PropertyList, replay
from ..oracle import oracle_replay
from .scripts import OpScript
from .stats import FTestResult, anova_f
from .workload import PRELOAD_MAX, PRELOAD_MIN, Workload, generate_workload

log = logging.getLogger(__name__)

DEFAULT_REPETITIONS = 10_000
DEFAULT_WARMUP = 1_000


@dataclass(frozen=True)
class CellStats:
    repetitions: Optional[int]
    mean_ns: float
    median_ns: float
    stddev_ns: float

    @classmethod
    def from_samples(cls, samples: Sequence[int]) -> "CellStats":
        return cls(
            len(samples),
            statistics.fmean(samples),
            float(statistics.median(samples)),
            statistics.stdev(samples) if len(samples) > 1 else 0.0,
        )


@dataclass
class BenchReport:
    scripts: list[OpScript]
    backends: list[BackendKind]
    cells: dict[tuple[str, BackendKind], CellStats] = field(default_factory=dict)

    def script_means(self, backend: BackendKind) -> list[float]:
        return [self.cells[s.mnemonic, backend].mean_ns for s in self.scripts]

    def average(self, backend: BackendKind) -> float:
        return statistics.fmean(self.script_means(backend))

    def averages(self) -> dict[BackendKind, float]:
        return {b: self.average(b) for b in self.backends}

    def f_test(self, backends: Optional[Sequence[BackendKind]] = None) -> Optional[FTestResult]:
        chosen = list(backends or self.backends)
        if len(chosen) < 2 or len(self.scripts) < 2:
            return None
        return anova_f([self.script_means(b) for b in chosen])


def pin_to_one_cpu() -> None:
    if hasattr(os, "sched_getaffinity"):
        cpus = sorted(os.sched_getaffinity(0))
        if cpus:
            os.sched_setaffinity(0, {cpus[0]})


def _factory(kind: BackendKind, word_width: int) -> Callable[[], PropertyList]:
    return lambda: make_backend(kind, word_width=word_width)


def run_script(backend: BackendKind, workload: Workload, repetitions: int = DEFAULT_REPETITIONS,
               warmup: int = DEFAULT_WARMUP, *, word_width: int = 32) -> list[int]:
    """Nanosecond timings of the three scripted ops, one per repetition.

    Each repetition builds a fresh backend and applies the preload outside
    the timed region.  Warmup repetitions are run and discarded.  Backend
    errors propagate: a compliant workload never triggers one.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    if warmup < 0:
        raise ValueError("warmup must be >= 0")
    new = _factory(backend, word_width)
    preload = [(op.name, op.value) for op in workload.preload]
    plan = [(op.kind, op.name, op.value) for op in workload.ops]
    samples = []
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for rep in range(warmup + repetitions):
            plist = new()
            insert = plist.insert
            for name, value in preload:
                insert(name, value)
            calls = []
            for kind, name, value in plan:
                if kind is OpKind.INSERT:
                    calls.append((plist.insert, (name, value)))
                elif kind is OpKind.REMOVE:
                    calls.append((plist.remove, (name,)))
                else:
                    calls.append((plist.lookup, (name,)))
            (f0, a0), (f1, a1), (f2, a2) = calls
            t0 = perf_counter_ns()
            f0(*a0)
            f1(*a1)
            f2(*a2)
            t1 = perf_counter_ns()
            if rep >= warmup:
                samples.append(t1 - t0)
    finally:
        if gc_was_enabled:
            gc.enable()
    return samples


def check_workload(backend: BackendKind, workload: Workload, *, word_width: int = 32) -> bool:
    """True when the backend's result trace equals the oracle's."""
    ops = workload.all_ops()
    got = replay(make_backend(backend, word_width=word_width), ops)
    want = oracle_replay(ops, capacity_of(backend, word_width=word_width))
    return got == want


def run_bench(backends: Sequence[BackendKind], scripts: Sequence[OpScript], *, seed: int = 42,
              repetitions: int = DEFAULT_REPETITIONS, warmup: int = DEFAULT_WARMUP,
              preload_min: int = PRELOAD_MIN, preload_max: int = PRELOAD_MAX,
              word_width: int = 32, pin: bool = True) -> BenchReport:
    if pin:
        pin_to_one_cpu()
    backends = sorted(backends, key=TABLE_ORDER.index)
    report = BenchReport(list(scripts), backends)
    for script in scripts:
        workload = generate_workload(seed, script, preload_min=preload_min, preload_max=preload_max)
        for kind in backends:
            log.debug("timing %s on %s", script.mnemonic, kind.value)
            samples = run_script(kind, workload, repetitions, warmup, word_width=word_width)
            report.cells[script.mnemonic, kind] = CellStats.from_samples(samples)
    return report


def observation_one(report: BenchReport) -> Optional[tuple[bool, str]]:
    """Do Set and Hash both average below Static Array and Linked List?

    Returns None when one of those four backends is missing from the report.
    """
    needed = (BackendKind.BITMASK_SET, BackendKind.HASH,
              BackendKind.STATIC_ARRAY, BackendKind.LINKED_LIST)
    if not all(b in report.backends for b in needed) or not report.scripts:
        return None
    avg = report.averages()
    fast = max(avg[BackendKind.BITMASK_SET], avg[BackendKind.HASH])
    slow = min(avg[BackendKind.STATIC_ARRAY], avg[BackendKind.LINKED_LIST])
    ok = fast < slow
    detail = ", ".join(f"{b.title} {avg[b]:.1f} ns" for b in needed)
    return ok, f"{'PASS' if ok else 'ADVISORY'}: Set/Hash below Static Array/Link List ({detail})"
