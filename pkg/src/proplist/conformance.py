"""Differential conformance runs against the oracle, shardable by seed."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, NamedTuple

from .backends import capacity_of, make_backend
from .bitmask import BitmaskPropertyList
from .core import BackendKind, apply_op, replay
from .oracle import oracle_replay, random_script


class SeedResult(NamedTuple):
    seed: int
    mismatched: tuple[str, ...]
    invariant_error: str


def check_seed(seed: int, length: int = 10_000, pool_size: int = 32,
               word_width: int = 32) -> SeedResult:
    """Replay one seeded script on every backend and compare with the oracle.

    The bitmask backend is additionally checked for mask consistency after
    every operation.
    """
    ops = random_script(seed, length, pool_size)
    bad = []
    invariant_error = ""
    traces: dict = {}
    for kind in BackendKind:
        cap = capacity_of(kind, word_width=word_width)
        if cap not in traces:
            traces[cap] = oracle_replay(ops, cap)
        want = traces[cap]
        if kind is BackendKind.BITMASK_SET:
            plist = BitmaskPropertyList(word_width)
            got = []
            for i, op in enumerate(ops):
                got.append(apply_op(plist, op))
                try:
                    plist.check_invariants()
                    assert bin(plist.set_contents).count("1") == plist.size()
                except AssertionError as exc:
                    if not invariant_error:
                        invariant_error = f"op {i}: {exc}"
        else:
            got = replay(make_backend(kind, word_width=word_width), ops)
        if got != want:
            bad.append(kind.value)
    return SeedResult(seed, tuple(bad), invariant_error)


def check_seeds(seeds: Iterable[int], length: int = 10_000, pool_size: int = 32,
                workers: int | None = None) -> list[SeedResult]:
    """Run ``check_seed`` over many seeds, one process per available CPU."""
    seeds = list(seeds)
    if workers is None:
        if hasattr(os, "sched_getaffinity"):
            workers = len(os.sched_getaffinity(0))
        else:
            workers = os.cpu_count() or 1
    if workers <= 1:
        return [check_seed(s, length, pool_size) for s in seeds]
    with ProcessPoolExecutor(workers) as pool:
        return list(pool.map(check_seed, seeds, [length] * len(seeds), [pool_size] * len(seeds),
                             chunksize=max(1, len(seeds) // (workers * 4))))
