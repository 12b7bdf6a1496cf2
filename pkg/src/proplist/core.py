"""Shared contract for every property-list backend.

A property list binds short byte-string names to opaque values.  All
backends expose ``insert``, ``remove``, ``lookup`` and ``size`` with the
same observable behaviour; they differ only in cost and capacity.
"""

from __future__ import annotations

import enum
from abc import ABC, abstractmethod
from typing import Any, Iterable, NamedTuple, Union

MAX_NAME_LENGTH = 32

NameLike = Union[bytes, bytearray, str]


class ErrorKind(enum.Enum):
    DUPLICATE_NAME = "DuplicateName"
    NOT_FOUND = "NotFound"
    CAPACITY_EXCEEDED = "CapacityExceeded"
    INVALID_NAME = "InvalidName"

    def __str__(self) -> str:
        return self.value


class PropertyListError(Exception):
    """Base class; ``kind`` identifies which contract rule was violated."""

    kind: ErrorKind


class DuplicateNameError(PropertyListError):
    kind = ErrorKind.DUPLICATE_NAME


class NotFoundError(PropertyListError):
    kind = ErrorKind.NOT_FOUND


class CapacityExceededError(PropertyListError):
    kind = ErrorKind.CAPACITY_EXCEEDED


class InvalidNameError(PropertyListError):
    kind = ErrorKind.INVALID_NAME


class BackendKind(enum.Enum):
    LINKED_LIST = "list"
    STATIC_ARRAY = "array"
    HASH = "hash"
    SPLAY_TREE = "tree"
    BITMASK_SET = "set"

    @property
    def title(self) -> str:
        return _TITLES[self]

    @classmethod
    def parse(cls, text: str) -> "BackendKind":
        key = text.strip().lower()
        for kind in cls:
            if key in (kind.value, kind.name.lower(), kind.name.lower().replace("_", "")):
                return kind
        if key in _ALIASES:
            return _ALIASES[key]
        raise ValueError(f"unknown backend {text!r}")


# column titles follow the published comparison table
_TITLES = {
    BackendKind.HASH: "Hash",
    BackendKind.SPLAY_TREE: "Binary Tree",
    BackendKind.LINKED_LIST: "Link List",
    BackendKind.STATIC_ARRAY: "Static Array",
    BackendKind.BITMASK_SET: "Set",
}

_ALIASES = {
    "linkedlist": BackendKind.LINKED_LIST,
    "linked": BackendKind.LINKED_LIST,
    "staticarray": BackendKind.STATIC_ARRAY,
    "splay": BackendKind.SPLAY_TREE,
    "splaytree": BackendKind.SPLAY_TREE,
    "bitmask": BackendKind.BITMASK_SET,
    "bitmaskset": BackendKind.BITMASK_SET,
}

# Table order used by reports.
TABLE_ORDER = (
    BackendKind.HASH,
    BackendKind.SPLAY_TREE,
    BackendKind.LINKED_LIST,
    BackendKind.STATIC_ARRAY,
    BackendKind.BITMASK_SET,
)


def validate_name(name: NameLike) -> bytes:
    """Return ``name`` as bytes, raising InvalidNameError if unusable.

    Strings are encoded as UTF-8; the 32-byte limit applies to the encoded
    form.
    """
    if type(name) is bytes and 0 < len(name) <= MAX_NAME_LENGTH:
        return name
    if isinstance(name, str):
        name = name.encode("utf-8")
    elif isinstance(name, bytearray):
        name = bytes(name)
    elif not isinstance(name, bytes):
        raise InvalidNameError(f"name must be bytes or str, not {type(name).__name__}")
    if not 1 <= len(name) <= MAX_NAME_LENGTH:
        raise InvalidNameError(
            f"name length {len(name)} outside 1..{MAX_NAME_LENGTH}: {name!r}"
        )
    return name


class PropertyList(ABC):
    """Abstract property list.

    Subclasses store names as validated ``bytes``.  Values are never
    inspected.
    """

    kind: BackendKind

    @abstractmethod
    def insert(self, name: NameLike, value: Any) -> None:
        """Bind ``name`` to ``value``; the name must not already be present."""

    @abstractmethod
    def remove(self, name: NameLike) -> Any:
        """Unbind ``name`` and return the value it held."""

    @abstractmethod
    def lookup(self, name: NameLike) -> Any:
        """Return the value bound to ``name``."""

    @abstractmethod
    def size(self) -> int:
        ...

    @abstractmethod
    def items(self) -> list[tuple[bytes, Any]]:
        """Live (name, value) pairs in no particular order."""

    @abstractmethod
    def reset_counters(self) -> None:
        ...

    def __len__(self) -> int:
        return self.size()

    def __repr__(self) -> str:
        return f"<{type(self).__name__} size={self.size()}>"


class OpKind(enum.Enum):
    INSERT = "I"
    REMOVE = "D"
    LOOKUP = "L"


class Op(NamedTuple):
    kind: OpKind
    name: bytes
    value: Any = None

    def __str__(self) -> str:
        if self.kind is OpKind.INSERT:
            return f"insert({self.name!r}, {self.value!r})"
        verb = "remove" if self.kind is OpKind.REMOVE else "lookup"
        return f"{verb}({self.name!r})"


def apply_op(plist: PropertyList, op: Op) -> Any:
    """Run ``op`` and return its result, or the ErrorKind it failed with.

    Successful inserts yield ``None``.
    """
    try:
        if op.kind is OpKind.LOOKUP:
            return plist.lookup(op.name)
        if op.kind is OpKind.INSERT:
            plist.insert(op.name, op.value)
            return None
        return plist.remove(op.name)
    except PropertyListError as exc:
        return exc.kind


def replay(plist: PropertyList, ops: Iterable[Op]) -> list[Any]:
    return [apply_op(plist, op) for op in ops]
