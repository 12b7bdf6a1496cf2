"""Word-sized set representation of a property list.

A single membership word (``set_contents``) records which of the ``W``
slots are live.  Slot ``i`` is identified by the one-hot bit string
``1 << i``; its name lives in the name table and its value in the value
table at the same index.
"""

from __future__ import annotations

from typing import Any, NamedTuple, Optional

from .core import (
    BackendKind,
    CapacityExceededError,
    DuplicateNameError,
    NameLike,
    NotFoundError,
    PropertyList,
    validate_name,
)

WORD_WIDTHS = (32, 64)


def bit_string(slot: int) -> int:
    return 1 << slot


def lowest_zero_bit(word: int) -> int:
    """Index of the least significant clear bit of ``word``."""
    return (~word & (word + 1)).bit_length() - 1


class SetSnapshot(NamedTuple):
    set_contents: int
    occupied: tuple[bool, ...]
    names: tuple[Optional[bytes], ...]


class BitmaskPropertyList(PropertyList):
    """At most ``word_width`` properties, O(1) in the word width.

    Inserts OR the slot's bit string into ``set_contents``; removals AND it
    with the complement.  ``slot_visits`` counts name-table slots compared
    while resolving a name to its slot.
    """

    kind = BackendKind.BITMASK_SET

    def __init__(self, word_width: int = 32) -> None:
        if word_width not in WORD_WIDTHS:
            raise ValueError(f"word width must be one of {WORD_WIDTHS}")
        self.word_width = word_width
        self.full_mask = (1 << word_width) - 1
        self._bit_format = f"0{word_width}b"
        self.set_contents = 0
        self.name_slots: list[Optional[bytes]] = [None] * word_width
        self.value_slots: list[Any] = [None] * word_width
        self.slot_visits = 0

    def reset_counters(self) -> None:
        self.slot_visits = 0

    def _find(self, name: bytes) -> int:
        if not self.set_contents:
            return -1
        try:
            i = self.name_slots.index(name)
        except ValueError:
            self.slot_visits += self.word_width
            return -1
        self.slot_visits += i + 1
        assert self.set_contents >> i & 1, f"name in slot {i} but bit clear"
        return i

    def find_slot(self, name: NameLike) -> Optional[int]:
        """Slot index holding ``name``, or None when it is not in the set."""
        i = self._find(validate_name(name))
        return None if i < 0 else i

    def insert(self, name: NameLike, value: Any) -> None:
        name = validate_name(name)
        if self._find(name) >= 0:
            raise DuplicateNameError(name)
        if self.set_contents == self.full_mask:
            raise CapacityExceededError(f"all {self.word_width} bits set")
        i = lowest_zero_bit(self.set_contents)
        self.name_slots[i] = name
        self.value_slots[i] = value
        self.set_contents |= 1 << i

    def remove(self, name: NameLike) -> Any:
        name = validate_name(name)
        i = self._find(name)
        if i < 0:
            raise NotFoundError(name)
        self.set_contents &= ~(1 << i) & self.full_mask
        value = self.value_slots[i]
        self.name_slots[i] = None
        self.value_slots[i] = None
        return value

    def lookup(self, name: NameLike) -> Any:
        name = validate_name(name)
        i = self._find(name)
        if i < 0:
            raise NotFoundError(name)
        return self.value_slots[i]

    def size(self) -> int:
        return bin(self.set_contents).count("1")

    def items(self) -> list[tuple[bytes, Any]]:
        return [(self.name_slots[i], self.value_slots[i])
                for i in range(self.word_width) if self.set_contents >> i & 1]

    def debug_state(self) -> SetSnapshot:
        return SetSnapshot(
            self.set_contents,
            tuple(n is not None for n in self.name_slots),
            tuple(self.name_slots),
        )

    def check_invariants(self) -> None:
        """Raise AssertionError if the mask and the slot tables disagree."""
        sc = self.set_contents
        assert 0 <= sc <= self.full_mask
        occupied = [n is not None for n in self.name_slots]
        bits = [c == "1" for c in format(sc, self._bit_format)[::-1]]
        assert occupied == bits, f"mask {sc:#x} disagrees with name slots"
        live = [n for n in self.name_slots if n is not None]
        assert len(live) == len(set(live)), "duplicate names in slots"
        assert len(live) == bin(sc).count("1")
        assert not any(v is not None for v, o in zip(self.value_slots, occupied) if not o), \
            "value held in an empty slot"
