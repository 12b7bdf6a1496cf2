"""Five interchangeable property-list backends and a benchmark harness."""

from .backends import capacity_of, make_backend
from .bitmask import BitmaskPropertyList
from .core import (
    BackendKind,
    CapacityExceededError,
    DuplicateNameError,
    ErrorKind,
    InvalidNameError,
    NotFoundError,
    Op,
    OpKind,
    PropertyList,
    PropertyListError,
    apply_op,
    replay,
    validate_name,
)
from .hashing import HashPropertyList, midsquare_hash, pack_name
from .linked_list import LinkedPropertyList
from .oracle import OracleStore, oracle_apply, oracle_replay
from .splay import SplayPropertyList
from .static_array import StaticArrayPropertyList

__all__ = [
    "BackendKind", "BitmaskPropertyList", "CapacityExceededError", "DuplicateNameError",
    "ErrorKind", "HashPropertyList", "InvalidNameError", "LinkedPropertyList",
    "NotFoundError", "Op", "OpKind", "OracleStore", "PropertyList", "PropertyListError",
    "SplayPropertyList", "StaticArrayPropertyList", "apply_op", "capacity_of",
    "make_backend", "midsquare_hash", "oracle_apply", "oracle_replay", "pack_name",
    "replay", "validate_name",
]
