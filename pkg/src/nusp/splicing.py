"""Words, splicing rules and the one-step splicing operation.

Symbols are plain strings (tokens), so a decorated symbol such as
``<^{q0,a,s,b,R}`` is a single letter of the alphabet.  A word is a tuple of
tokens and the empty tuple is the empty word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Symbol = str
Word = tuple  # tuple[Symbol, ...]

LAMBDA: Word = ()


def word(*tokens: Symbol) -> Word:
    return tuple(tokens)


def chars(text: str) -> Word:
    """Split a string into one-character tokens: ``chars("ab") == ("a", "b")``."""
    return tuple(text)


def alph(w: Sequence[Symbol]) -> frozenset:
    """The set of distinct symbols occurring in ``w``."""
    return frozenset(w)


def show(w: Sequence[Symbol]) -> str:
    return " ".join(w) if w else "~"


@dataclass(frozen=True, order=True)
class SplicingRule:
    """The quadruple ``[(u1, u2); (v1, v2)]``.

    Applied to ``x = x1 u1 u2 x2`` and ``y = y1 v1 v2 y2`` it produces the
    single word ``x1 u1 v2 y2``.
    """

    u1: Word = LAMBDA
    u2: Word = LAMBDA
    v1: Word = LAMBDA
    v2: Word = LAMBDA

    def __post_init__(self):
        for name in ("u1", "u2", "v1", "v2"):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    @property
    def left_site(self) -> Word:
        return self.u1 + self.u2

    @property
    def right_site(self) -> Word:
        return self.v1 + self.v2

    def symbols(self) -> frozenset:
        return frozenset(self.u1 + self.u2 + self.v1 + self.v2)

    def __str__(self):
        return "[({}, {}); ({}, {})]".format(*(show(p) for p in (self.u1, self.u2, self.v1, self.v2)))


def occurrences(pattern: Sequence[Symbol], w: Sequence[Symbol]) -> list[int]:
    """Start positions of every (possibly overlapping) occurrence of ``pattern`` in ``w``.

    The empty pattern occurs at all ``len(w) + 1`` positions.
    """
    k = len(pattern)
    if k == 0:
        return list(range(len(w) + 1))
    pattern = tuple(pattern)
    first = pattern[0]
    return [i for i in range(len(w) - k + 1) if w[i] == first and tuple(w[i:i + k]) == pattern]


def left_parts(rule: SplicingRule, x: Word) -> set:
    """All prefixes ``x1 u1`` over the factorizations ``x = x1 u1 u2 x2``."""
    cut = len(rule.u1)
    return {x[:i + cut] for i in occurrences(rule.left_site, x)}


def right_parts(rule: SplicingRule, y: Word) -> set:
    """All suffixes ``v2 y2`` over the factorizations ``y = y1 v1 v2 y2``."""
    cut = len(rule.v1)
    return {y[i + cut:] for i in occurrences(rule.right_site, y)}


def splice_pair(rule: SplicingRule, x: Word, y: Word) -> set:
    """The words ``z`` with ``(x, y) |-_rule z``."""
    lefts = left_parts(rule, x)
    if not lefts:
        return set()
    rights = right_parts(rule, y)
    return {p + s for p in lefts for s in rights}


def sigma(rules: Iterable[SplicingRule], language: Iterable[Word]) -> set:
    """One splicing step: every product of every ordered pair (u, v) of ``language``.

    A word may splice with itself.  ``language`` is not carried over into
    the result.
    """
    language = [tuple(w) for w in set(map(tuple, language))]
    out: set = set()
    if not language:
        return out
    for rule in rules:
        # (u, v) ranges over L x L, so the cut sets can be pooled per side.
        lefts = set().union(*(left_parts(rule, x) for x in language))
        if not lefts:
            continue
        rights = set().union(*(right_parts(rule, y) for y in language))
        out.update(p + s for p in lefts for s in rights)
    return out


def fixed_cuts(rules: Sequence[SplicingRule], words: Iterable[Word]) -> list:
    """Per rule, the left and right parts contributed by ``words`` (e.g. axioms)."""
    words = [tuple(w) for w in words]
    return [(set().union(*(left_parts(r, w) for w in words)), set().union(*(right_parts(r, w) for w in words)))
            for r in rules]


def sigma_with_fixed(rules: Sequence[SplicingRule], cuts: list, language: Iterable[Word]) -> set:
    """``sigma(rules, language | F)`` where ``cuts = fixed_cuts(rules, F)``."""
    language = set(map(tuple, language))
    out: set = set()
    for rule, (fixed_left, fixed_right) in zip(rules, cuts):
        lefts = set(fixed_left)
        for x in language:
            lefts |= left_parts(rule, x)
        if not lefts:
            continue
        rights = set(fixed_right)
        for y in language:
            rights |= right_parts(rule, y)
        out.update(p + s for p in lefts for s in rights)
    return out
