"""Ordered property list backed by a bottom-up splay tree."""

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


class SplayNode:
    __slots__ = ("name", "value", "left", "right", "parent")

    def __init__(self, name: bytes, value: Any, parent: Optional["SplayNode"] = None) -> None:
        self.name = name
        self.value = value
        self.left: Optional[SplayNode] = None
        self.right: Optional[SplayNode] = None
        self.parent = parent


class SplayPropertyList(PropertyList):
    """Property list whose names are kept in byte-lexicographic order.

    Every access splays the touched node to the root, so repeated access to
    a small working set stays cheap.  ``node_visits`` counts nodes inspected
    while descending.
    """

    kind = BackendKind.SPLAY_TREE

    def __init__(self) -> None:
        self.root: Optional[SplayNode] = None
        self._size = 0
        self.node_visits = 0
        self.rotations = 0

    def reset_counters(self) -> None:
        self.node_visits = 0
        self.rotations = 0

    def _rotate(self, x: SplayNode) -> None:
        # lift x above its parent
        p = x.parent
        g = p.parent
        if p.left is x:
            p.left = x.right
            if x.right is not None:
                x.right.parent = p
            x.right = p
        else:
            p.right = x.left
            if x.left is not None:
                x.left.parent = p
            x.left = p
        p.parent = x
        x.parent = g
        if g is None:
            self.root = x
        elif g.left is p:
            g.left = x
        else:
            g.right = x
        self.rotations += 1

    def _splay(self, x: SplayNode) -> None:
        rotate = self._rotate
        while x.parent is not None:
            p = x.parent
            g = p.parent
            if g is None:
                rotate(x)  # zig
            elif (g.left is p) == (p.left is x):
                rotate(p)  # zig-zig
                rotate(x)
            else:
                rotate(x)  # zig-zag
                rotate(x)

    def _descend(self, name: bytes) -> Optional[SplayNode]:
        """Return the node holding ``name`` or the last node on its path."""
        node = self.root
        last = None
        while node is not None:
            self.node_visits += 1
            last = node
            if name < node.name:
                node = node.left
            elif name > node.name:
                node = node.right
            else:
                return node
        return last

    def splay(self, name: NameLike) -> None:
        """Bring ``name`` (or the last node on its search path) to the root."""
        name = validate_name(name)
        node = self._descend(name)
        if node is not None:
            self._splay(node)

    def insert(self, name: NameLike, value: Any) -> None:
        name = validate_name(name)
        last = self._descend(name)
        if last is None:
            self.root = SplayNode(name, value)
            self._size = 1
            return
        if last.name == name:
            self._splay(last)
            raise DuplicateNameError(name)
        node = SplayNode(name, value, last)
        if name < last.name:
            last.left = node
        else:
            last.right = node
        self._splay(node)
        self._size += 1

    def lookup(self, name: NameLike) -> Any:
        name = validate_name(name)
        node = self._descend(name)
        if node is None:
            raise NotFoundError(name)
        self._splay(node)
        if node.name != name:
            raise NotFoundError(name)
        return node.value

    def remove(self, name: NameLike) -> Any:
        name = validate_name(name)
        node = self._descend(name)
        if node is None:
            raise NotFoundError(name)
        self._splay(node)
        if node.name != name:
            raise NotFoundError(name)
        left, right = node.left, node.right
        if left is None:
            self.root = right
            if right is not None:
                right.parent = None
        else:
            left.parent = None
            self.root = left
            top = left
            self.node_visits += 1
            while top.right is not None:
                top = top.right
                self.node_visits += 1
            self._splay(top)
            top.right = right
            if right is not None:
                right.parent = top
        self._size -= 1
        return node.value

    def size(self) -> int:
        return self._size

    def _walk(self) -> Iterator[SplayNode]:
        stack: list[SplayNode] = []
        node = self.root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            yield node
            node = node.right

    def in_order(self) -> list[bytes]:
        return [n.name for n in self._walk()]

    def items(self) -> list[tuple[bytes, Any]]:
        return [(n.name, n.value) for n in self._walk()]

    def check_structure(self) -> None:
        """Assert BST order and parent-link consistency."""
        if self.root is not None:
            assert self.root.parent is None
        names = []
        for n in self._walk():
            for child in (n.left, n.right):
                if child is not None:
                    assert child.parent is n
            names.append(n.name)
        assert all(x < y for x, y in zip(names, names[1:])), "in-order not increasing"
        assert len(names) == self._size
