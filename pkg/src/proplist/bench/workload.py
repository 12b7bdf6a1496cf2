"""Seeded, reproducible workloads: a preload followed by one script."""

from __future__ import annotations

import random
import string
from dataclasses import dataclass

from ..core import MAX_NAME_LENGTH, Op, OpKind
from .scripts import SCRIPTS, OpScript

NAME_ALPHABET = (string.ascii_letters + string.digits).encode()
VALUE_LENGTH = 8
PRELOAD_MIN = 25
PRELOAD_MAX = 29


@dataclass(frozen=True)
class Workload:
    seed: int
    script: OpScript
    preload: tuple[Op, ...]
    ops: tuple[Op, ...]

    @property
    def preload_count(self) -> int:
        return len(self.preload)

    def all_ops(self) -> tuple[Op, ...]:
        return self.preload + self.ops


def random_name(rng: random.Random, max_length: int = MAX_NAME_LENGTH) -> bytes:
    length = rng.randint(1, max_length)
    return bytes(rng.choice(NAME_ALPHABET) for _ in range(length))


def generate_workload(seed: int, script: OpScript | str, *,
                      preload_min: int = PRELOAD_MIN, preload_max: int = PRELOAD_MAX,
                      name_length_max: int = MAX_NAME_LENGTH) -> Workload:
    """Build the preload and the three scripted operations.

    Deletes and lookups target a live name chosen uniformly; inserts use a
    name never seen before in this workload.  Every scripted operation
    therefore succeeds on an unbounded backend.
    """
    if isinstance(script, str):
        script = SCRIPTS[script.upper()]
    if not 3 <= preload_min <= preload_max:
        raise ValueError("need 3 <= preload_min <= preload_max")
    rng = random.Random(f"{seed}:{script.mnemonic}:{preload_min}:{preload_max}")
    used: set[bytes] = set()

    def fresh() -> bytes:
        while True:
            name = random_name(rng, name_length_max)
            if name not in used:
                used.add(name)
                return name

    live: list[bytes] = []
    preload = []
    for _ in range(rng.randint(preload_min, preload_max)):
        name = fresh()
        live.append(name)
        preload.append(Op(OpKind.INSERT, name, rng.randbytes(VALUE_LENGTH)))

    ops = []
    for kind in script.ops:
        if kind is OpKind.INSERT:
            name = fresh()
            live.append(name)
            ops.append(Op(kind, name, rng.randbytes(VALUE_LENGTH)))
        elif kind is OpKind.REMOVE:
            name = live.pop(rng.randrange(len(live)))
            ops.append(Op(kind, name))
        else:
            ops.append(Op(kind, rng.choice(live)))
    return Workload(seed, script, tuple(preload), tuple(ops))
