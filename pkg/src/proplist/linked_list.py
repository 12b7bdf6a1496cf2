"""Property list as a single chain of alternating name and value cells."""

from __future__ import annotations

from typing import Any, Iterator, Optional

from .core import (
    BackendKind,
    DuplicateNameError,
    NameLike,
    NotFoundError,
    PropertyList,
    validate_name,
)


class ListCell:
    __slots__ = ("payload", "next")

    def __init__(self, payload: Any, next: Optional["ListCell"] = None) -> None:
        self.payload = payload
        self.next = next


class LinkedPropertyList(PropertyList):
    """Unbounded property list backed by a singly linked chain.

    Cells alternate name, value, name, value, ...; new pairs are spliced in
    at the head.  ``comparisons`` counts name cells inspected by scans and
    ``splices`` counts link rewrites.
    """

    kind = BackendKind.LINKED_LIST

    def __init__(self) -> None:
        self.head: Optional[ListCell] = None
        self._size = 0
        self.comparisons = 0
        self.splices = 0

    def reset_counters(self) -> None:
        self.comparisons = 0
        self.splices = 0

    def _find(self, name: bytes) -> tuple[Optional[ListCell], Optional[ListCell]]:
        # returns (value cell preceding the match, matched name cell)
        prev = None
        cell = self.head
        while cell is not None:
            self.comparisons += 1
            if cell.payload == name:
                return prev, cell
            prev = cell.next
            cell = prev.next
        return prev, None

    def insert(self, name: NameLike, value: Any) -> None:
        name = validate_name(name)
        if self._find(name)[1] is not None:
            raise DuplicateNameError(name)
        self.head = ListCell(name, ListCell(value, self.head))
        self.splices += 1
        self._size += 1

    def remove(self, name: NameLike) -> Any:
        name = validate_name(name)
        prev, cell = self._find(name)
        if cell is None:
            raise NotFoundError(name)
        value_cell = cell.next
        if prev is None:
            self.head = value_cell.next
        else:
            prev.next = value_cell.next
        self.splices += 1
        self._size -= 1
        return value_cell.payload

    def lookup(self, name: NameLike) -> Any:
        name = validate_name(name)
        cell = self._find(name)[1]
        if cell is None:
            raise NotFoundError(name)
        return cell.next.payload

    def size(self) -> int:
        return self._size

    def cells(self) -> Iterator[Any]:
        """Yield every cell payload in chain order (names at even offsets)."""
        cell = self.head
        while cell is not None:
            yield cell.payload
            cell = cell.next

    def items(self) -> list[tuple[bytes, Any]]:
        flat = list(self.cells())
        return list(zip(flat[0::2], flat[1::2]))
