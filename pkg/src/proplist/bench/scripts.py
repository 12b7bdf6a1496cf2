"""The fifteen three-operation scripts timed by the benchmark."""

from __future__ import annotations

from typing import NamedTuple

from ..core import OpKind

_WORDS = {OpKind.INSERT: "Insert", OpKind.REMOVE: "Delete", OpKind.LOOKUP: "LookUp"}


class OpScript(NamedTuple):
    mnemonic: str
    ops: tuple[OpKind, OpKind, OpKind]

    @property
    def label(self) -> str:
        return "-".join(_WORDS[k] for k in self.ops) + f" ({self.mnemonic})"


MNEMONICS = (
    "ILD", "IDL", "LID", "LDI", "DIL", "DLI", "III", "IIL",
    "IID", "DDD", "DDI", "DDL", "LLL", "LLD", "LLI",
)

SCRIPTS = {m: OpScript(m, tuple(OpKind(c) for c in m)) for m in MNEMONICS}


def parse_scripts(text: str) -> list[OpScript]:
    """``"all"`` or a comma-separated list of mnemonics."""
    if text.strip().lower() == "all":
        return list(SCRIPTS.values())
    out = []
    for part in text.split(","):
        key = part.strip().upper()
        if key not in SCRIPTS:
            raise ValueError(f"unknown script mnemonic {part.strip()!r}; expected one of {', '.join(MNEMONICS)}")
        out.append(SCRIPTS[key])
    return out
