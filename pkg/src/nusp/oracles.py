"""Independent reference implementations and differential checks.

``naive_sigma`` re-derives one splicing step straight from the definition
with its own slicing loops; it deliberately shares no code with
:mod:`nusp.splicing`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.optimize import linprog

from .network import Configuration, Network, RunLimits, communication_step, run
from .splicing import SplicingRule, sigma
from .turing import TuringMachine, tm_run


def naive_sigma(rules, language) -> set:
    words = [tuple(w) for w in language]
    out = set()
    for r in rules:
        u1, u2, v1, v2 = (tuple(p) for p in (r.u1, r.u2, r.v1, r.v2))
        for x in words:
            for y in words:
                for a in range(len(x) + 1):
                    if x[a:a + len(u1)] != u1 or x[a + len(u1):a + len(u1) + len(u2)] != u2:
                        continue
                    if a + len(u1) + len(u2) > len(x):
                        continue
                    for b in range(len(y) + 1):
                        end = b + len(v1) + len(v2)
                        if end > len(y):
                            continue
                        if y[b:b + len(v1)] == v1 and y[b + len(v1):end] == v2:
                            out.add(x[:a] + u1 + v2 + y[end:])
    return out


@dataclass(frozen=True)
class InstanceParams:
    alphabet_size: int = 3
    max_word_length: int = 5
    max_set_size: int = 4
    max_rule_length: int = 2
    max_rules: int = 3
    lambda_probability: float = 0.3
    seed: int = 7

    def __post_init__(self):
        for name in ("alphabet_size", "max_word_length", "max_set_size", "max_rule_length", "max_rules"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @property
    def alphabet(self) -> list:
        return [chr(ord("a") + i) for i in range(self.alphabet_size)]


def random_instance(params: InstanceParams, rng: random.Random) -> tuple[list, list]:
    letters = params.alphabet

    def component():
        if rng.random() < params.lambda_probability:
            return ()
        return tuple(rng.choice(letters) for _ in range(rng.randint(1, params.max_rule_length)))

    rules = [SplicingRule(component(), component(), component(), component())
             for _ in range(rng.randint(1, params.max_rules))]
    language = {tuple(rng.choice(letters) for _ in range(rng.randint(0, params.max_word_length)))
                for _ in range(rng.randint(1, params.max_set_size))}
    return rules, sorted(language)


def instance_stream(params: InstanceParams, cases: int):
    rng = random.Random(params.seed)
    for _ in range(cases):
        yield random_instance(params, rng)


@dataclass
class DifferentialResult:
    cases: int
    case: int | None = None
    rules: list | None = None
    language: list | None = None
    expected: set | None = None
    got: set | None = None

    @property
    def passed(self) -> bool:
        return self.case is None

    def __str__(self):
        if self.passed:
            return f"pass: {self.cases} cases"
        rules = ", ".join(map(str, self.rules))
        return (f"counterexample at case {self.case}: rules {rules}; language {self.language}; "
                f"missing {sorted(self.expected - self.got)}; extra {sorted(self.got - self.expected)}")


def differential_sigma(params: InstanceParams, cases: int,
                       impl: Callable = sigma, oracle: Callable = naive_sigma) -> DifferentialResult:
    for i, (rules, language) in enumerate(instance_stream(params, cases)):
        got, expected = set(impl(rules, language)), set(oracle(rules, language))
        if got != expected:
            return DifferentialResult(cases, i, rules, language, expected, got)
    return DifferentialResult(cases)


def fit_overhead(points: Sequence[tuple]) -> tuple[float, float]:
    """Tightest line ``c1 * d + c0`` lying on or above every (depth, time) point.

    Minimises the summed slack subject to ``c1, c0 >= 0``.
    """
    if not points:
        return 0.0, 0.0
    d = np.array([p[0] for p in points], dtype=float)
    t = np.array([p[1] for p in points], dtype=float)
    res = linprog(c=[d.sum(), len(d)], A_ub=-np.column_stack([d, np.ones_like(d)]), b_ub=-t,
                  bounds=[(0, None), (0, None)], method="highs")
    if not res.success:
        raise RuntimeError(f"overhead fit failed: {res.message}")
    # clean solver noise off the slope, then take the smallest intercept
    # that keeps every point under the line
    c1 = float(np.round(res.x[0], 9))
    c0 = max(0.0, float((t - c1 * d).max()))
    return c1, c0


@dataclass
class WordOutcome:
    word: tuple
    tm: object
    nusp: object

    @property
    def agree(self) -> bool:
        return self.tm.accepted == self.nusp.accepted


@dataclass
class EquivalenceReport:
    machine: str
    tested: int = 0
    mismatches: list = field(default_factory=list)
    outcomes: list = field(default_factory=list)
    c1: float = 0.0
    c0: float = 0.0
    bound: tuple = (0, 0)
    max_steps_used: int = 0

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def accepted_points(self) -> list:
        return [(o.tm.depth, o.nusp.step) for o in self.outcomes if o.tm.accepted and o.nusp.accepted]

    def render(self) -> str:
        lines = [f"machine {self.machine}: {self.tested} words, {len(self.mismatches)} mismatches",
                 f"fitted time bound: {self.c1:g} * depth + {self.c0:g}",
                 f"construction bound: {self.bound[0]} * depth + {self.bound[1]}",
                 f"largest step count: {self.max_steps_used}"]
        for o in self.mismatches:
            lines.append(f"  mismatch on {' '.join(o.word) or '~'}: tm {o.tm.outcome} depth {o.tm.depth}, "
                         f"network {o.nusp}")
        return "\n".join(lines)

    def records(self) -> list:
        return [{"word": list(o.word), "tm": o.tm.outcome, "tm_depth": o.tm.depth,
                 "network": o.nusp.kind.value, "network_step": o.nusp.step} for o in self.outcomes]


def words_up_to(alphabet: Iterable[str], max_len: int):
    letters = sorted(alphabet)
    for n in range(max_len + 1):
        yield from itertools.product(letters, repeat=n)


def equivalence_check(M: TuringMachine, cn, max_len: int, limits: RunLimits | None = None,
                      budget_factor: float = 4, tm_bound: int = 10_000, words=None,
                      workers: int = 1) -> EquivalenceReport:
    """Compare the network's verdict with the machine's on every word up to ``max_len``.

    The network gets ``budget_factor * (c1 * depth + c0)`` steps, with the
    construction's constants and the machine's deciding depth; running out
    counts as rejection.
    """
    net: Network = cn.network
    c1, c0 = cn.overhead
    limits = limits or RunLimits()
    report = EquivalenceReport(M.name or "machine", bound=(c1, c0))
    for w in (words if words is not None else words_up_to(M.input_alphabet, max_len)):
        w = tuple(w)
        tv = tm_run(M, w, tm_bound)
        budget = int(budget_factor * (c1 * tv.depth + c0))
        budget = min(budget, limits.max_steps)
        verdict, _ = run(net, w, RunLimits(budget, limits.max_word_length, limits.max_words_per_node),
                         workers=workers)
        outcome = WordOutcome(w, tv, verdict)
        report.outcomes.append(outcome)
        report.tested += 1
        report.max_steps_used = max(report.max_steps_used, verdict.step)
        if not outcome.agree:
            report.mismatches.append(outcome)
    report.c1, report.c0 = fit_overhead(report.accepted_points())
    return report


@dataclass
class CommunicationFixture:
    name: str
    network: Network
    before: dict
    expected: dict
    expected_lost: set


@dataclass
class FixtureResult:
    diffs: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.diffs


def communication_fixture_check(fixtures: Iterable[CommunicationFixture]) -> FixtureResult:
    result = FixtureResult()
    for fx in fixtures:
        after, lost = communication_step(fx.network, Configuration(fx.before))
        for node in fx.network.nodes:
            want = {tuple(w) for w in fx.expected.get(node, ())}
            got = set(after[node])
            for z in sorted(want - got):
                result.diffs.append(f"{fx.name}: node {node} is missing {' '.join(z) or '~'}")
            for z in sorted(got - want):
                result.diffs.append(f"{fx.name}: node {node} unexpectedly holds {' '.join(z) or '~'}")
        want_lost = {tuple(w) for w in fx.expected_lost}
        for z in sorted(want_lost - lost):
            result.diffs.append(f"{fx.name}: {' '.join(z) or '~'} expected lost but was not")
        for z in sorted(set(lost) - want_lost):
            result.diffs.append(f"{fx.name}: {' '.join(z) or '~'} lost unexpectedly")
    return result


def standard_communication_fixtures() -> list:
    from .filters import STRONG, WEAK, Filter
    from .network import UniformProcessor

    def two_node(fx, fy):
        return Network({"a", "b"}, {"a", "b", "<", ">"}, "<", ">",
                       {"x": UniformProcessor(filter=fx), "y": UniformProcessor(filter=fy)},
                       {frozenset({"x", "y"})}, "x", "y")

    ab = ("a", "b")
    isolated = Network({"a", "b"}, {"a", "b", "<", ">"}, "<", ">",
                       {"x": UniformProcessor(filter=Filter({"a"}, set(), WEAK)),
                        "h": UniformProcessor(filter=Filter({">"}, set(), WEAK))},
                       set(), "x", "h")
    return [
        CommunicationFixture("lost", two_node(Filter({"a"}, set(), STRONG), Filter({"a"}, {"b"}, STRONG)),
                             {"x": {ab}}, {}, {ab}),
        CommunicationFixture("transfer", two_node(Filter({"a"}, set(), WEAK), Filter({"b"}, set(), WEAK)),
                             {"x": {ab}}, {"y": {ab}}, set()),
        CommunicationFixture("isolated", isolated, {"x": {ab}}, {}, {ab}),
        CommunicationFixture("retain", two_node(Filter({"b"}, {"a"}, WEAK), Filter({"a"}, set(), WEAK)),
                             {"x": {ab}}, {"x": {ab}}, set()),
    ]


def provenance_check(net: Network, w, trace) -> list:
    """Words in ``trace`` that cannot be traced back to the input word and the axioms.

    Needs a trace recorded with ``keep_configurations=True, provenance=True``.
    """
    axioms = set().union(*(p.axioms for p in net.processors.values()))
    known = {net.encode(w)} | axioms
    problems = []
    configs = trace.configurations
    for k in range(1, len(configs)):
        prev, cur = configs[k - 1], configs[k]
        for node in net.nodes:
            for z in cur[node]:
                if k % 2 == 1:
                    src = trace.provenance.get((k, node, z))
                    ok = src is not None and src[1] in known and src[2] in known
                else:
                    ok = z in known and any(z in prev[n] for n in [node, *net.neighbours(node)])
                if not ok:
                    problems.append((k, node, z))
                known.add(z)
    return problems


def differential_run(net: Network, w, limits: RunLimits | None = None, workers=(1, 2, 4)) -> bool:
    """True when every worker count yields the same verdict and trace."""
    results = []
    for n in workers:
        verdict, trace = run(net, w, limits, full=True, workers=n)
        results.append((verdict, [(e.step, e.kind, e.sizes, e.lost, e.contents) for e in trace.events]))
    return all(r == results[0] for r in results)
