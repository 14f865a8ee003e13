"""Nondeterministic single-tape Turing machines and a breadth-first reference simulator.

The tape is infinite to the right only.  A left move on cell 0 kills the
branch, and a branch with no applicable transition halts without accepting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

LEFT, RIGHT = "L", "R"


class Transition(NamedTuple):
    state: str
    read: str
    new_state: str
    write: str
    move: str

    def __str__(self):
        return f"({self.state},{self.read},{self.new_state},{self.write},{self.move})"


@dataclass(frozen=True)
class TuringMachine:
    states: frozenset
    input_alphabet: frozenset
    tape_alphabet: frozenset
    blank: str
    transitions: tuple
    initial: str
    accepting: frozenset
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "input_alphabet", frozenset(self.input_alphabet))
        object.__setattr__(self, "tape_alphabet", frozenset(self.tape_alphabet))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        # delta is a set; keep a canonical order for reproducible compilation
        object.__setattr__(self, "transitions", tuple(sorted({Transition(*t) for t in self.transitions})))

    def problems(self) -> list[str]:
        out = []
        if self.blank in self.input_alphabet:
            out.append(f"blank {self.blank!r} is in the input alphabet")
        if self.blank not in self.tape_alphabet:
            out.append(f"blank {self.blank!r} is not in the tape alphabet")
        if not self.input_alphabet <= self.tape_alphabet:
            out.append(f"input symbols missing from the tape alphabet: {sorted(self.input_alphabet - self.tape_alphabet)}")
        if self.initial not in self.states:
            out.append(f"initial state {self.initial!r} is not declared")
        if not self.accepting <= self.states:
            out.append(f"undeclared accepting states: {sorted(self.accepting - self.states)}")
        for t in self.transitions:
            if t.state not in self.states or t.new_state not in self.states:
                out.append(f"transition {t} uses an undeclared state")
            if t.read not in self.tape_alphabet or t.write not in self.tape_alphabet:
                out.append(f"transition {t} uses an undeclared tape symbol")
            if t.move not in (LEFT, RIGHT):
                out.append(f"transition {t} has move {t.move!r}, expected L or R")
        return out

    def validate(self):
        problems = self.problems()
        if problems:
            raise ValueError("; ".join(problems))

    def by_situation(self) -> dict:
        table: dict = {}
        for t in self.transitions:
            table.setdefault((t.state, t.read), []).append(t)
        return table


class TMConfiguration(NamedTuple):
    tape: tuple
    head: int
    state: str


def tm_successors(M: TuringMachine, c: TMConfiguration, _table=None) -> set:
    table = _table if _table is not None else M.by_situation()
    tape = c.tape
    read = tape[c.head] if c.head < len(tape) else M.blank
    out = set()
    for t in table.get((c.state, read), ()):
        new = list(tape)
        while len(new) <= c.head:
            new.append(M.blank)
        new[c.head] = t.write
        if t.move == RIGHT:
            head = c.head + 1
            if head == len(new):
                new.append(M.blank)
        else:
            if c.head == 0:
                continue
            head = c.head - 1
        out.add(TMConfiguration(tuple(new), head, t.new_state))
    return out


class TMVerdict(NamedTuple):
    outcome: str  # "accept", "reject" or "bound_exceeded"
    depth: int

    @property
    def accepted(self) -> bool:
        return self.outcome == "accept"


def initial_tm_configuration(M: TuringMachine, w: Sequence[str]) -> TMConfiguration:
    w = tuple(w)
    stray = [a for a in w if a not in M.input_alphabet]
    if stray:
        raise ValueError(f"input word uses symbols outside the input alphabet: {stray}")
    return TMConfiguration(w if w else (M.blank,), 0, M.initial)


def tm_run(M: TuringMachine, w: Sequence[str], step_bound: int = 10_000) -> TMVerdict:
    """Breadth-first search over configuration sets.

    ``depth`` is the minimal accepting depth, the depth at which the frontier
    emptied, or ``step_bound`` when the bound ran out.
    """
    if step_bound < 0:
        raise ValueError("step_bound must be non-negative")
    table = M.by_situation()
    frontier = {initial_tm_configuration(M, w)}
    seen = set(frontier)
    depth = 0
    while True:
        if any(c.state in M.accepting for c in frontier):
            return TMVerdict("accept", depth)
        if not frontier:
            return TMVerdict("reject", depth)
        if depth >= step_bound:
            return TMVerdict("bound_exceeded", depth)
        nxt = set()
        for c in frontier:
            nxt |= tm_successors(M, c, table)
        frontier = nxt - seen
        seen |= frontier
        depth += 1
