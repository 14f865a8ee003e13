"""Random-context filters with permitting and forbidding symbols."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

STRONG = "s"
WEAK = "w"
MODES = (STRONG, WEAK)


@dataclass(frozen=True)
class Filter:
    """Permitting set ``permit``, forbidding set ``forbid`` and mode ``s`` or ``w``.

    Strong mode requires every permitting symbol to occur, weak mode at least
    one.  In both modes no forbidding symbol may occur.
    """

    permit: frozenset = field(default_factory=frozenset)
    forbid: frozenset = field(default_factory=frozenset)
    mode: str = WEAK

    def __post_init__(self):
        object.__setattr__(self, "permit", frozenset(self.permit))
        object.__setattr__(self, "forbid", frozenset(self.forbid))
        if self.mode not in MODES:
            raise ValueError(f"filter mode must be 's' or 'w', got {self.mode!r}")

    def overlap(self) -> frozenset:
        return self.permit & self.forbid

    def warnings(self) -> list[str]:
        out = []
        if not self.permit:
            out.append("empty permitting set" + (" (weak filter rejects every word)" if self.mode == WEAK else ""))
        if not self.forbid:
            out.append("empty forbidding set")
        return out

    def __call__(self, z) -> bool:
        return passes(z, self)


def passes(z, f: Filter) -> bool:
    symbols = set(z)
    if not f.forbid.isdisjoint(symbols):
        return False
    if f.mode == STRONG:
        return f.permit <= symbols
    return not f.permit.isdisjoint(symbols)


def filter_set(language: Iterable, f: Filter) -> set:
    return {tuple(z) for z in language if passes(z, f)}
