import itertools
from pathlib import Path

import pytest
from hypothesis import strategies as st

import nusp
from nusp.compiler import compile_machine
from nusp.machines import SAMPLES
from nusp.splicing import SplicingRule

DATA = Path(nusp.__file__).parent / "data"
SHIPPED = sorted(p.name for p in DATA.iterdir() if p.suffix in (".tm", ".nusp"))


def w(text):
    """Shorthand: one-character tokens, ``"~"`` for the empty word."""
    return () if text in ("", "~") else tuple(text)


def ws(*texts):
    return {w(t) for t in texts}


letters = st.sampled_from("abc")
words = st.lists(letters, max_size=5).map(tuple)
components = st.lists(letters, max_size=2).map(tuple)
rules = st.builds(SplicingRule, components, components, components, components)
languages = st.sets(words, max_size=4)
rule_sets = st.lists(rules, max_size=3)


@pytest.fixture(scope="session")
def compiled():
    return {name: compile_machine(f()) for name, f in SAMPLES.items()}


@pytest.fixture(scope="session")
def machines():
    return {name: f() for name, f in SAMPLES.items()}


def all_words(alphabet, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(sorted(alphabet), repeat=n)


# (criterion number, passed, detail), filled in by test_acceptance
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} criterion {number}: {detail}")
