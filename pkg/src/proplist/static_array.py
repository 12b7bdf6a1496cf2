"""Fixed-capacity array of name/value slot pairs with hole marking."""

from __future__ import annotations

from typing import Any, Optional

from .core import (
    BackendKind,
    CapacityExceededError,
    DuplicateNameError,
    NameLike,
    NotFoundError,
    PropertyList,
    validate_name,
)

DEFAULT_CAPACITY = 32


class StaticArrayPropertyList(PropertyList):
    """Property list stored in ``capacity`` preallocated slot pairs.

    An empty slot holds ``None`` for its name.  Removal leaves a hole; the
    next insert fills the lowest-index hole.  Searches never stop early at a
    hole, so ``slot_visits`` for an absent name is always the capacity.
    """

    kind = BackendKind.STATIC_ARRAY

    def __init__(self, capacity: int = DEFAULT_CAPACITY) -> None:
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self.capacity = capacity
        self.names: list[Optional[bytes]] = [None] * capacity
        self.values: list[Any] = [None] * capacity
        self._size = 0
        self.slot_visits = 0

    def reset_counters(self) -> None:
        self.slot_visits = 0

    def _find(self, name: bytes) -> int:
        names = self.names
        for i in range(self.capacity):
            self.slot_visits += 1
            if names[i] == name:
                return i
        return -1

    def _first_empty(self) -> int:
        names = self.names
        for i in range(self.capacity):
            if names[i] is None:
                return i
        return -1

    def insert(self, name: NameLike, value: Any) -> None:
        name = validate_name(name)
        if self._find(name) >= 0:
            raise DuplicateNameError(name)
        i = self._first_empty()
        if i < 0:
            raise CapacityExceededError(f"all {self.capacity} slots occupied")
        self.names[i] = name
        self.values[i] = value
        self._size += 1

    def remove(self, name: NameLike) -> Any:
        name = validate_name(name)
        i = self._find(name)
        if i < 0:
            raise NotFoundError(name)
        value = self.values[i]
        self.names[i] = None
        self.values[i] = None
        self._size -= 1
        return value

    def lookup(self, name: NameLike) -> Any:
        name = validate_name(name)
        i = self._find(name)
        if i < 0:
            raise NotFoundError(name)
        return self.values[i]

    def size(self) -> int:
        return self._size

    def occupied(self) -> list[bool]:
        return [n is not None for n in self.names]

    def items(self) -> list[tuple[bytes, Any]]:
        return [(n, v) for n, v in zip(self.names, self.values) if n is not None]
