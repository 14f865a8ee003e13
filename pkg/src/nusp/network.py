"""Networks of uniform splicing processors and their step semantics.

A run alternates a splicing step (every node replaces its contents by the
splicing products of its contents plus its axioms) with a communication
step (every word passing its node's filter leaves, and each neighbour keeps
the copies that also pass its own filter).
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .filters import Filter, passes
from .splicing import SplicingRule, Word, fixed_cuts, sigma, sigma_with_fixed

LITERAL = "literal"
PRESERVE = "preserve"
PERSISTENCE_MODES = (LITERAL, PRESERVE)

SPLICE = "splice"
COMMUNICATE = "communicate"


@dataclass(frozen=True)
class UniformProcessor:
    rules: tuple = ()
    axioms: frozenset = frozenset()
    filter: Filter = field(default_factory=Filter)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(sorted(set(self.rules))))
        object.__setattr__(self, "axioms", frozenset(tuple(a) for a in self.axioms))

    def symbols(self) -> set:
        out = set(self.filter.permit | self.filter.forbid)
        for r in self.rules:
            out |= r.symbols()
        for a in self.axioms:
            out.update(a)
        return out


@dataclass
class Network:
    input_alphabet: frozenset
    network_alphabet: frozenset
    left_marker: str
    right_marker: str
    processors: dict  # node name -> UniformProcessor, in declaration order
    edges: frozenset  # of frozenset({x, y})
    input_node: str
    halt_node: str
    persistence: str = LITERAL

    def __post_init__(self):
        self.input_alphabet = frozenset(self.input_alphabet)
        self.network_alphabet = frozenset(self.network_alphabet)
        self.processors = dict(self.processors)
        self.edges = frozenset(frozenset(e) for e in self.edges)
        self._neighbours = None
        self._idle = None
        self._cuts = None

    @property
    def nodes(self) -> list:
        return list(self.processors)

    def __len__(self):
        return len(self.processors)

    def neighbours(self, node: str) -> list:
        if self._neighbours is None:
            order = {n: i for i, n in enumerate(self.processors)}
            nb = {n: [] for n in self.processors}
            for e in self.edges:
                if len(e) != 2:
                    continue
                x, y = tuple(e)
                if x in nb and y in nb:
                    nb[x].append(y)
                    nb[y].append(x)
            self._neighbours = {n: sorted(v, key=order.__getitem__) for n, v in nb.items()}
        return self._neighbours[node]

    def idle_products(self) -> dict:
        """Per node, what splicing produces from the axioms alone."""
        if self._idle is None:
            self._idle = {n: frozenset(sigma(p.rules, p.axioms)) for n, p in self.processors.items()}
        return self._idle

    def axiom_cuts(self) -> dict:
        if self._cuts is None:
            self._cuts = {n: fixed_cuts(p.rules, p.axioms) for n, p in self.processors.items()}
        return self._cuts

    def encode(self, w: Sequence[str]) -> Word:
        return (self.left_marker, *w, self.right_marker)


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


class NetworkError(ValueError):
    pass


class ResourceLimitExceeded(RuntimeError):
    pass


def validate(net: Network) -> ValidationReport:
    report = ValidationReport()
    bad = report.violations
    V, U = net.input_alphabet, net.network_alphabet
    if not V:
        bad.append("input alphabet is empty")
    if not V <= U:
        bad.append(f"input symbols missing from the network alphabet: {sorted(V - U)}")
    for label, m in (("left", net.left_marker), ("right", net.right_marker)):
        if m in V:
            bad.append(f"{label} marker {m!r} belongs to the input alphabet")
        if m not in U:
            bad.append(f"{label} marker {m!r} is not in the network alphabet")
    if net.left_marker == net.right_marker:
        bad.append("left and right markers coincide")
    if net.persistence not in PERSISTENCE_MODES:
        bad.append(f"unknown persistence mode {net.persistence!r}")
    for e in net.edges:
        ends = sorted(e)
        if len(ends) == 1:
            bad.append(f"self-loop on node {ends[0]!r}")
            continue
        for n in ends:
            if n not in net.processors:
                bad.append(f"edge {ends[0]!r}--{ends[1]!r} names unknown node {n!r}")
    for label, n in (("input", net.input_node), ("halt", net.halt_node)):
        if n not in net.processors:
            bad.append(f"{label} node {n!r} is not declared")
    if net.input_node == net.halt_node:
        bad.append("input node and halt node coincide")
    for name, proc in net.processors.items():
        overlap = proc.filter.overlap()
        if overlap:
            bad.append(f"node {name!r}: permitting and forbidding sets overlap on {sorted(overlap)}")
        stray = proc.symbols() - U
        if stray:
            bad.append(f"node {name!r} uses symbols outside the network alphabet: {sorted(stray)}")
        for msg in proc.filter.warnings():
            report.warnings.append(f"node {name!r}: {msg}")
    return report


class Configuration:
    """Word sets per node.  Axioms are never stored here."""

    __slots__ = ("contents",)

    def __init__(self, contents: Mapping[str, Iterable[Word]]):
        self.contents = {n: frozenset(tuple(w) for w in ws) for n, ws in contents.items()}

    def __getitem__(self, node: str) -> frozenset:
        return self.contents.get(node, frozenset())

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple:
        return tuple((n, ws) for n, ws in sorted(self.contents.items()) if ws)

    def is_empty(self) -> bool:
        return not any(self.contents.values())

    def words(self) -> set:
        return set().union(*self.contents.values()) if self.contents else set()

    def sizes(self, order: Sequence[str]) -> tuple:
        return tuple(len(self[n]) for n in order)

    def sorted_contents(self, order: Sequence[str]) -> dict:
        return {n: sorted(self[n]) for n in order}

    def __repr__(self):
        inner = ", ".join(f"{n}: {len(ws)}" for n, ws in self.contents.items() if ws)
        return f"Configuration({inner})"


def initial_configuration(net: Network, w: Sequence[str]) -> Configuration:
    w = tuple(w)
    stray = [a for a in w if a not in net.input_alphabet]
    if stray:
        raise NetworkError(f"input word uses symbols outside the input alphabet: {stray}")
    contents = {n: frozenset() for n in net.processors}
    contents[net.input_node] = frozenset([net.encode(w)])
    return Configuration(contents)


@dataclass(frozen=True)
class RunLimits:
    max_steps: int = 100_000
    max_word_length: int = 10_000
    max_words_per_node: int = 100_000

    def __post_init__(self):
        if self.max_steps < 0 or self.max_word_length <= 0 or self.max_words_per_node <= 0:
            raise ValueError("run limits must be positive")


def _check(node: str, words: frozenset, limits: RunLimits):
    if len(words) > limits.max_words_per_node:
        raise ResourceLimitExceeded(f"node {node!r} holds {len(words)} words")
    for w in words:
        if len(w) > limits.max_word_length:
            raise ResourceLimitExceeded(f"node {node!r} holds a word of length {len(w)}")


def _map(fn, items, workers):
    if workers and workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(i) for i in items]


def splicing_step(net: Network, C: Configuration, limits: RunLimits | None = None,
                  workers: int = 1) -> Configuration:
    limits = limits or RunLimits()
    preserve = net.persistence == PRESERVE
    idle = net.idle_products()
    cuts = net.axiom_cuts()

    def one(node):
        proc = net.processors[node]
        here = C[node]
        if not here:
            new = idle[node]
        else:
            new = frozenset(sigma_with_fixed(proc.rules, cuts[node], here))
        if preserve:
            new = here | new
        _check(node, new, limits)
        return new

    nodes = net.nodes
    return Configuration(dict(zip(nodes, _map(one, nodes, workers))))


def communication_step(net: Network, C: Configuration, limits: RunLimits | None = None,
                       workers: int = 1) -> tuple[Configuration, frozenset]:
    """Returns the next configuration and the set of lost words."""
    limits = limits or RunLimits()
    nodes = net.nodes
    outgoing = {n: frozenset(w for w in C[n] if passes(w, net.processors[n].filter)) for n in nodes}

    def one(node):
        f = net.processors[node].filter
        new = set(C[node] - outgoing[node])
        for y in net.neighbours(node):
            new.update(w for w in outgoing[y] if passes(w, f))
        new = frozenset(new)
        _check(node, new, limits)
        return new

    contents = dict(zip(nodes, _map(one, nodes, workers)))
    lost = set()
    for n in nodes:
        nbrs = [net.processors[y].filter for y in net.neighbours(n)]
        lost.update(w for w in outgoing[n] if not any(passes(w, f) for f in nbrs))
    return Configuration(contents), frozenset(lost)


def is_halting(net: Network, C: Configuration) -> bool:
    return bool(C[net.halt_node])


class VerdictKind(enum.Enum):
    ACCEPTED = "accepted"
    STEP_LIMIT = "step-limit"
    RESOURCE_LIMIT = "resource-limit"
    CYCLE = "cycle"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    step: int  # index of the last configuration examined
    detail: str = ""

    @property
    def accepted(self) -> bool:
        return self.kind is VerdictKind.ACCEPTED

    def __str__(self):
        if self.accepted:
            return f"accepted step={self.step}"
        return f"{self.kind.value} step={self.step}" + (f" ({self.detail})" if self.detail else "")


@dataclass(frozen=True)
class TraceEvent:
    """Transition from configuration ``step`` to ``step + 1``."""

    step: int
    kind: str
    sizes: tuple
    lost: int = 0
    contents: dict | None = None


@dataclass
class Trace:
    nodes: list
    initial: Configuration
    events: list = field(default_factory=list)
    configurations: list | None = None
    provenance: dict | None = None  # (step, node, word) -> (rule, x, y)

    def configuration(self, k: int) -> Configuration:
        if self.configurations is None:
            raise ValueError("run was not asked to keep configurations")
        return self.configurations[k]


def derivations(rules: Sequence[SplicingRule], language: Iterable[Word]) -> dict:
    """Map each product of one splicing step to one (rule, x, y) witness."""
    from .splicing import splice_pair

    language = sorted(set(map(tuple, language)))
    out = {}
    for r in rules:
        for x in language:
            for y in language:
                for z in sorted(splice_pair(r, x, y)):
                    out.setdefault(z, (r, x, y))
    return out


def run(net: Network, w: Sequence[str], limits: RunLimits | None = None, *, full: bool = False,
        keep_configurations: bool = False, workers: int = 1, detect_cycles: bool = True,
        provenance: bool = False) -> tuple[Verdict, Trace]:
    report = validate(net)
    if not report.ok:
        raise NetworkError("; ".join(report.violations))
    limits = limits or RunLimits()
    nodes = net.nodes
    C = initial_configuration(net, w)
    trace = Trace(nodes=nodes, initial=C, configurations=[C] if keep_configurations else None,
                  provenance={} if provenance else None)
    idle_empty = not any(net.idle_products().values())
    seen = set()
    step = 0
    while True:
        if is_halting(net, C):
            return Verdict(VerdictKind.ACCEPTED, step), trace
        if idle_empty and C.is_empty():
            return Verdict(VerdictKind.EXHAUSTED, step), trace
        if detect_cycles:
            key = (step % 2, C.key())
            if key in seen:
                return Verdict(VerdictKind.CYCLE, step), trace
            seen.add(key)
        if step >= limits.max_steps:
            return Verdict(VerdictKind.STEP_LIMIT, step), trace
        kind = SPLICE if step % 2 == 0 else COMMUNICATE
        lost = frozenset()
        try:
            if kind == SPLICE:
                if provenance:
                    for n in nodes:
                        p = net.processors[n]
                        for z, src in derivations(p.rules, C[n] | p.axioms).items():
                            trace.provenance[(step + 1, n, z)] = src
                nxt = splicing_step(net, C, limits, workers)
            else:
                nxt, lost = communication_step(net, C, limits, workers)
        except ResourceLimitExceeded as exc:
            return Verdict(VerdictKind.RESOURCE_LIMIT, step, str(exc)), trace
        trace.events.append(TraceEvent(step, kind, nxt.sizes(nodes), len(lost),
                                       nxt.sorted_contents(nodes) if full else None))
        if keep_configurations:
            trace.configurations.append(nxt)
        C = nxt
        step += 1


class NotAccepted(RuntimeError):
    def __init__(self, w, verdict):
        super().__init__(f"word {' '.join(w) or '~'} was not accepted: {verdict}")
        self.word = w
        self.verdict = verdict


def time_profile(net: Network, words: Iterable[Sequence[str]], limits: RunLimits | None = None,
                 workers: int = 1) -> dict:
    """Largest accepting step count per input length over ``words``."""
    profile: dict = {}
    for w in words:
        w = tuple(w)
        verdict, _ = run(net, w, limits, workers=workers)
        if not verdict.accepted:
            raise NotAccepted(w, verdict)
        n = len(w)
        profile[n] = max(profile.get(n, 0), verdict.step)
    return dict(sorted(profile.items()))
