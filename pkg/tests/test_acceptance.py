"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary
(and immediately, when run with ``-s``).
"""

import itertools
import time

import pytest

from nusp.compiler import bootstrap_word, compile_machine
from nusp.filters import STRONG, WEAK, Filter, passes
from nusp.formats import emit_machine, emit_network, emit_trace, parse_machine, parse_network
from nusp.network import run
from nusp.oracles import (
    InstanceParams,
    communication_fixture_check,
    differential_sigma,
    equivalence_check,
    standard_communication_fixtures,
)
from nusp.turing import TuringMachine

from .conftest import ACCEPTANCE, DATA, SHIPPED, all_words

MACHINES = ["even-as", "anbn", "palindromes"]

# Time bounds c1 * depth + c0, fixed from the construction: 10 steps per
# right move, 10 + 4i per left move over the i-th tape symbol, 4 to bootstrap.
FROZEN_BOUNDS = {"even-as": (10, 4), "anbn": (30, 4), "palindromes": (26, 4)}


def report(number, passed, detail):
    ACCEPTANCE.append((number, passed, detail))
    print(f"{'PASS' if passed else 'FAIL'} criterion {number}: {detail}")
    assert passed, detail


@pytest.fixture(scope="module")
def equivalence(compiled, machines):
    reports, elapsed = {}, {}
    for name in MACHINES:
        start = time.perf_counter()
        reports[name] = equivalence_check(machines[name], compiled[name], 6)
        elapsed[name] = time.perf_counter() - start
    return reports, elapsed


def test_criterion_1_sigma_differential():
    params = InstanceParams(alphabet_size=3, max_word_length=5, max_set_size=4, max_rule_length=2, seed=7)
    start = time.perf_counter()
    result = differential_sigma(params, 1000)
    elapsed = time.perf_counter() - start
    report(1, result.passed and elapsed < 30, f"{result}; {elapsed:.2f} s (limit 30 s)")


def test_criterion_2_filter_truth_table():
    symbols = "abc"
    cases = wrong = 0
    words = list(all_words(symbols, 3))
    # each symbol goes to P, to F or to neither: every disjoint pair once
    for placement in itertools.product((0, 1, 2), repeat=len(symbols)):
        P = {s for s, k in zip(symbols, placement) if k == 1}
        F = {s for s, k in zip(symbols, placement) if k == 2}
        for mode in (STRONG, WEAK):
            f = Filter(P, F, mode)
            for z in words:
                letters = set(z)
                expected = (P <= letters if mode == STRONG else bool(letters & P)) and not letters & F
                cases += 1
                wrong += passes(z, f) != expected
    report(2, wrong == 0 and cases == 27 * 2 * 40, f"{cases - wrong}/{cases} cases agree")


def test_criterion_3_communication_fixtures():
    fixtures = standard_communication_fixtures()
    result = communication_fixture_check(fixtures)
    names = ", ".join(fx.name for fx in fixtures)
    report(3, result.passed, f"fixtures {names}: " + ("exact match" if result.passed else "; ".join(result.diffs)))


def sized_machine(k):
    """A machine with exactly k transitions, mixing left and right moves."""
    states = [f"q{i}" for i in range(k + 1)]
    delta = [(f"q{i}", "a", f"q{i + 1}", "b", "LR"[i % 2]) for i in range(k)]
    return TuringMachine(states, {"a"}, {"a", "b", "B"}, "B", delta, "q0", {f"q{k}"})


def test_criterion_4_size_law():
    counts = {k: len(compile_machine(sized_machine(k)).network) for k in range(1, 11)}
    bad = {k: n for k, n in counts.items() if n != 2 * k + 4}
    report(4, not bad, f"node counts {list(counts.values())} for |delta| = 1..10" + (f"; wrong: {bad}" if bad else ""))


def bootstrap_hits(compiled, index):
    missing = []
    for name in MACHINES:
        cn = compiled[name]
        for x in all_words(cn.machine.input_alphabet, 3):
            _, trace = run(cn.network, x, keep_configurations=True)
            if len(trace.configurations) <= index or bootstrap_word(cn, x) not in trace.configuration(index)[cn.network.input_node]:
                missing.append((name, "".join(x) or "~"))
    return missing


def test_criterion_5_bootstrap_at_c2(compiled):
    # Splicing and communication alternate, so the second splicing step in
    # In ends at C_3; C_2 holds only the half-rewritten words.
    missing = bootstrap_hits(compiled, 2)
    report(5, not missing, "bootstrap word present in C_2 for every input" if not missing else
           f"bootstrap word absent from C_2 for {len(missing)} inputs, e.g. {missing[:3]}")


def test_bootstrap_at_c3(compiled):
    # companion check: the word produced by the two splicing steps, one configuration later
    assert bootstrap_hits(compiled, 3) == []


def test_criterion_6_equivalence(equivalence):
    reports, elapsed = equivalence
    tested = sum(r.tested for r in reports.values())
    mismatches = sum(len(r.mismatches) for r in reports.values())
    per = ", ".join(f"{n} {len(r.mismatches)}/{r.tested} in {elapsed[n]:.1f} s" for n, r in reports.items())
    report(6, mismatches == 0 and tested == 3 * 127, f"{mismatches} mismatches over {tested} words ({per})")


def test_criterion_7_time_bound(equivalence, compiled):
    reports, _ = equivalence
    problems, parts = [], []
    for name, (c1, c0) in FROZEN_BOUNDS.items():
        if compiled[name].overhead != (c1, c0):
            problems.append(f"{name}: construction gives {compiled[name].overhead}")
        pts = reports[name].accepted_points()
        over = [(d, t) for d, t in pts if t > c1 * d + c0]
        problems += [f"{name}: depth {d} took {t}" for d, t in over]
        worst = max(t / (c1 * d + c0) for d, t in pts)
        parts.append(f"{name} {c1}d+{c0} over {len(pts)} words (tightest use {worst:.2f}, "
                     f"fitted {reports[name].c1:g}d+{reports[name].c0:g})")
    report(7, not problems, "; ".join(problems or parts))


def test_criterion_8_determinism(compiled):
    differing = []
    checked = 0
    for name in MACHINES:
        net = compiled[name].network
        for x in ["", "ab", "aabb", "abba", "bab"]:
            outputs = set()
            for workers in (1, 1, 2, 4):
                verdict, trace = run(net, tuple(x), full=True, workers=workers)
                outputs.add((str(verdict), emit_trace(trace, full=True)))
            checked += 1
            if len(outputs) != 1:
                differing.append(f"{name}:{x or '~'}")
    report(8, not differing, f"{checked} runs x 4 (repeat, workers 1/2/4) byte-identical" if not differing
           else f"traces differ for {differing}")


def test_criterion_9_round_trip():
    broken = []
    for name in SHIPPED:
        text = (DATA / name).read_text()
        parse, emit = (parse_machine, emit_machine) if name.endswith(".tm") else (parse_network, emit_network)
        first = parse(text)
        canonical = emit(first)
        if parse(canonical) != first or emit(parse(canonical)) != canonical:
            broken.append(name)
    report(9, not broken, f"{len(SHIPPED) - len(broken)}/{len(SHIPPED)} shipped files round-trip")
