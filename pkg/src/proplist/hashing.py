"""Mid-square hashing and the open-addressing property list built on it.

Collisions are resolved first by sequential probing of up to
``probe_limit`` consecutive buckets, then by an overflow chain hung off the
home bucket.
"""

from __future__ import annotations

import struct
from functools import reduce
from operator import xor
from typing import Any, NamedTuple, Optional

from .core import (
    BackendKind,
    DuplicateNameError,
    NameLike,
    NotFoundError,
    PropertyList,
    validate_name,
)

MASK32 = 0xFFFFFFFF
DEFAULT_TABLE_SIZE = 64
DEFAULT_PROBE_LIMIT = 8


class WordPair(NamedTuple):
    a: int
    b: int


class MidSquareTrace(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    e: int
    centre: int
    index: int


def pack_name(name: NameLike) -> WordPair:
    """Fold a name into two 32-bit words.

    The name is cut into little-endian 4-byte chunks (the last one
    zero-padded); even-numbered chunks are XORed into ``a`` and odd-numbered
    ones into ``b``.
    """
    return WordPair(*_fold(validate_name(name)))


def _fold(raw: bytes) -> tuple[int, int]:
    n = (len(raw) + 3) >> 2
    chunks = struct.unpack(f"<{n}I", raw.ljust(n << 2, b"\0"))
    return reduce(xor, chunks[0::2], 0), reduce(xor, chunks[1::2], 0)


def _check_table_size(table_size: int) -> None:
    if table_size < 1 or table_size & (table_size - 1):
        raise ValueError(f"table size must be a power of two, got {table_size}")


def midsquare_trace(words: tuple[int, int], table_size: int = DEFAULT_TABLE_SIZE) -> MidSquareTrace:
    """Every intermediate of the hash, for auditing."""
    _check_table_size(table_size)
    a, b = words
    if not (0 <= a <= MASK32 and 0 <= b <= MASK32):
        raise ValueError("words must be unsigned 32-bit values")
    c = a * b
    d = ((c >> 32) + (c & MASK32)) & MASK32
    e = d * d
    centre = (e >> 16) & MASK32
    return MidSquareTrace(a, b, c, d, e, centre, centre & (table_size - 1))


def midsquare_hash(words: tuple[int, int], table_size: int = DEFAULT_TABLE_SIZE) -> int:
    """Bucket index for a word pair.

    Two-word product, fold the halves with a 32-bit add, square, keep bits
    16..47 of the 64-bit square, reduce modulo the table size.
    """
    a, b = words
    c = a * b
    d = ((c >> 32) + (c & MASK32)) & MASK32
    return ((d * d) >> 16) & MASK32 & (table_size - 1)


class _Tombstone:
    __slots__ = ()

    def __repr__(self) -> str:
        return "TOMBSTONE"


TOMBSTONE = _Tombstone()


class HashPropertyList(PropertyList):
    """Unbounded property list in a fixed bucket array.

    ``probes`` counts buckets inspected and ``overflow_visits`` counts
    overflow-chain entries inspected.
    """

    kind = BackendKind.HASH

    def __init__(self, table_size: int = DEFAULT_TABLE_SIZE,
                 probe_limit: int = DEFAULT_PROBE_LIMIT) -> None:
        _check_table_size(table_size)
        if not 1 <= probe_limit <= table_size:
            raise ValueError("probe_limit must be in 1..table_size")
        self.table_size = table_size
        self.probe_limit = probe_limit
        self._mask = table_size - 1
        # None = never used, TOMBSTONE = removed, bytes = live name
        self.names: list[Any] = [None] * table_size
        self.values: list[Any] = [None] * table_size
        self.overflow: list[Optional[list[list[Any]]]] = [None] * table_size
        self._size = 0
        self.probes = 0
        self.overflow_visits = 0

    def reset_counters(self) -> None:
        self.probes = 0
        self.overflow_visits = 0

    def home_index(self, name: NameLike) -> int:
        return midsquare_hash(_fold(validate_name(name)), self.table_size)

    def _locate(self, name: bytes) -> tuple[int, int, int, int]:
        """Return (home, slot, chain position, first free slot); -1 when absent.

        A never-used bucket on the probe path ends the search: nothing with
        this home can sit beyond it, nor in the overflow chain, because
        buckets never revert to the never-used state.
        """
        home = midsquare_hash(_fold(name), self.table_size)
        names = self.names
        free = -1
        for j in range(self.probe_limit):
            idx = (home + j) & self._mask
            self.probes += 1
            current = names[idx]
            if current is None:
                return home, -1, -1, (idx if free < 0 else free)
            if current is TOMBSTONE:
                if free < 0:
                    free = idx
            elif current == name:
                return home, idx, -1, free
        chain = self.overflow[home]
        if chain:
            for pos, entry in enumerate(chain):
                self.overflow_visits += 1
                if entry[0] == name:
                    return home, -1, pos, free
        return home, -1, -1, free

    def insert(self, name: NameLike, value: Any) -> None:
        name = validate_name(name)
        home, slot, pos, free = self._locate(name)
        if slot >= 0 or pos >= 0:
            raise DuplicateNameError(name)
        if free >= 0:
            self.names[free] = name
            self.values[free] = value
        else:
            chain = self.overflow[home]
            if chain is None:
                chain = self.overflow[home] = []
            chain.append([name, value])
        self._size += 1

    def remove(self, name: NameLike) -> Any:
        name = validate_name(name)
        home, slot, pos, _ = self._locate(name)
        if slot >= 0:
            value = self.values[slot]
            self.names[slot] = TOMBSTONE
            self.values[slot] = None
        elif pos >= 0:
            value = self.overflow[home].pop(pos)[1]
        else:
            raise NotFoundError(name)
        self._size -= 1
        return value

    def lookup(self, name: NameLike) -> Any:
        name = validate_name(name)
        home, slot, pos, _ = self._locate(name)
        if slot >= 0:
            return self.values[slot]
        if pos >= 0:
            return self.overflow[home][pos][1]
        raise NotFoundError(name)

    def size(self) -> int:
        return self._size

    def bucket_state(self, index: int) -> str:
        current = self.names[index]
        if current is None:
            return "empty"
        if current is TOMBSTONE:
            return "tombstone"
        return "occupied"

    def overflow_names(self, home: int) -> list[bytes]:
        return [entry[0] for entry in self.overflow[home] or ()]

    def items(self) -> list[tuple[bytes, Any]]:
        out = [(n, v) for n, v in zip(self.names, self.values)
               if n is not None and n is not TOMBSTONE]
        for chain in self.overflow:
            if chain:
                out.extend((n, v) for n, v in chain)
        return out
