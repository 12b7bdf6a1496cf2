"""Construct any backend from its BackendKind."""

from __future__ import annotations

from typing import Optional

from .bitmask import BitmaskPropertyList
from .core import BackendKind, PropertyList
from .hashing import HashPropertyList
from .linked_list import LinkedPropertyList
from .splay import SplayPropertyList
from .static_array import StaticArrayPropertyList

BACKEND_CLASSES = {
    BackendKind.LINKED_LIST: LinkedPropertyList,
    BackendKind.STATIC_ARRAY: StaticArrayPropertyList,
    BackendKind.HASH: HashPropertyList,
    BackendKind.SPLAY_TREE: SplayPropertyList,
    BackendKind.BITMASK_SET: BitmaskPropertyList,
}


def make_backend(kind: BackendKind | str, *, word_width: int = 32,
                 capacity: Optional[int] = None) -> PropertyList:
    """Fresh, empty property list of the given kind.

    ``word_width`` applies to the bitmask set; ``capacity`` to the static
    array (defaults to 32 pairs).
    """
    if isinstance(kind, str):
        kind = BackendKind.parse(kind)
    if kind is BackendKind.BITMASK_SET:
        return BitmaskPropertyList(word_width)
    if kind is BackendKind.STATIC_ARRAY:
        return StaticArrayPropertyList(capacity or 32)
    return BACKEND_CLASSES[kind]()


def capacity_of(kind: BackendKind, *, word_width: int = 32,
                capacity: Optional[int] = None) -> Optional[int]:
    """Fixed capacity of a backend kind, or None if unbounded."""
    if kind is BackendKind.BITMASK_SET:
        return word_width
    if kind is BackendKind.STATIC_ARRAY:
        return capacity or 32
    return None
