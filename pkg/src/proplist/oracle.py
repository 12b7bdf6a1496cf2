"""Brute-force reference semantics for differential testing.

The oracle keeps a plain list of (name, value) pairs and answers every
operation by exhaustive scan.  It returns failures as ErrorKind values
instead of raising so traces can be compared element-wise.
"""

from __future__ import annotations

import random
import string
from typing import Any, Iterable, Optional

from .core import MAX_NAME_LENGTH, ErrorKind, Op, OpKind

_ALPHABET = (string.ascii_letters + string.digits).encode()


class OracleStore:
    def __init__(self, capacity: Optional[int] = None) -> None:
        self.entries: list[tuple[bytes, Any]] = []
        self.capacity = capacity

    def size(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def items(self) -> list[tuple[bytes, Any]]:
        return list(self.entries)


def _valid(name: Any) -> bool:
    return isinstance(name, bytes) and 1 <= len(name) <= MAX_NAME_LENGTH


def oracle_apply(store: OracleStore, op: Op) -> Any:
    name = op.name.encode("utf-8") if isinstance(op.name, str) else op.name
    if not _valid(name):
        return ErrorKind.INVALID_NAME
    position = -1
    for i, (n, _) in enumerate(store.entries):
        if n == name:
            position = i
            break
    if op.kind is OpKind.INSERT:
        if position >= 0:
            return ErrorKind.DUPLICATE_NAME
        if store.capacity is not None and len(store.entries) >= store.capacity:
            return ErrorKind.CAPACITY_EXCEEDED
        store.entries.append((name, op.value))
        return None
    if position < 0:
        return ErrorKind.NOT_FOUND
    if op.kind is OpKind.REMOVE:
        return store.entries.pop(position)[1]
    return store.entries[position][1]


def oracle_replay(ops: Iterable[Op], capacity: Optional[int] = None) -> list[Any]:
    store = OracleStore(capacity)
    return [oracle_apply(store, op) for op in ops]


def name_pool(rng: random.Random, size: int) -> list[bytes]:
    """``size`` distinct valid names of random length 1..32."""
    pool: list[bytes] = []
    seen: set[bytes] = set()
    while len(pool) < size:
        name = bytes(rng.choice(_ALPHABET) for _ in range(rng.randint(1, MAX_NAME_LENGTH)))
        if name not in seen:
            seen.add(name)
            pool.append(name)
    return pool


def random_script(seed: int, length: int, pool_size: int = 32,
                  weights: tuple[float, float, float] = (1, 1, 1)) -> list[Op]:
    """Seeded mix of inserts, removes and lookups over a name pool.

    ``weights`` are the relative frequencies of insert, remove and lookup.
    A pool no larger than a backend's capacity never triggers
    CapacityExceeded.
    """
    rng = random.Random(seed)
    pool = name_pool(rng, pool_size)
    kinds = (OpKind.INSERT, OpKind.REMOVE, OpKind.LOOKUP)
    ops = []
    for _ in range(length):
        kind = rng.choices(kinds, weights)[0] if weights != (1, 1, 1) else rng.choice(kinds)
        name = rng.choice(pool)
        value = rng.getrandbits(32).to_bytes(4, "little") if kind is OpKind.INSERT else None
        ops.append(Op(kind, name, value))
    return ops


def overfill_script(seed: int, length: int, capacity: int) -> list[Op]:
    """Insert-heavy script over a pool larger than ``capacity``."""
    return random_script(seed, length, pool_size=capacity + 16, weights=(3, 1, 1))
