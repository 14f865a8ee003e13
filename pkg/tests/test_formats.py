import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nusp.formats import (
    FormatError,
    emit_machine,
    emit_network,
    emit_trace,
    parse_machine,
    parse_network,
    parse_trace,
    quote,
    tokenize,
)
from nusp.network import run

from .conftest import DATA, SHIPPED, w

SMALL = """\
alphabet input a b
alphabet network a b < > %
markers < >
input-node x
halt-node y
node x
  mode s
  permit a
  forbid %
  axiom a
  axiom ~
  rule (a, b); (~, "%")
node y
edge x y
"""

TM = """\
states q0 q1
input-alphabet a
tape-alphabet a B
blank B
initial q0
accepting q1
trans q0 a -> q1 b R
"""


def test_tokenize_quotes_and_punctuation():
    toks = tokenize('rule ("<^{q0}", %E); (<, ~)')
    assert toks == ["rule", "(", "<^{q0}", ",", "%E", ")", ";", "(", "<", ",", "~", ")"]
    assert toks[2].quoted and not toks[4].quoted


@pytest.mark.parametrize("token", ["a", "~", "#x", "with space", 'q"uote', "a,b", ">'", "(", "back\\slash"])
def test_quote_round_trip(token):
    assert tokenize(quote(token)) == [token]


def test_small_network_parses():
    net = parse_network(SMALL)
    x = net.processors["x"]
    assert x.filter.mode == "s" and x.axioms == {("a",), ()}
    assert [str(r) for r in x.rules] == ["[(a, b); (~, %)]"]
    assert net.neighbours("y") == ["x"]


def test_quoted_tilde_is_a_symbol():
    text = SMALL.replace("alphabet network a b < > %", 'alphabet network a b < > % "~"').replace(
        "axiom a\n", 'axiom a "~"\n')
    assert parse_network(text).processors["x"].axioms == {("a", "~"), ()}


def test_edge_to_undeclared_node():
    with pytest.raises(FormatError) as exc:
        parse_network(SMALL + "edge x z\n")
    assert exc.value.diagnostics == ["line 15: edge names undeclared node 'z'"]


def test_duplicate_node():
    with pytest.raises(FormatError) as exc:
        parse_network(SMALL + "node x\n")
    assert "line 15: duplicate node name 'x' (first declared on line 6)" in exc.value.diagnostics


def test_unknown_section_and_undeclared_symbol():
    with pytest.raises(FormatError) as exc:
        parse_network(SMALL.replace("permit a", "permit c") + "weights 1 2\n")
    diags = exc.value.diagnostics
    assert "line 15: unknown section 'weights'" in diags
    assert "line 8: undeclared symbol 'c' in node 'x'" in diags


def test_missing_header_lines():
    with pytest.raises(FormatError) as exc:
        parse_network("node x\n")
    assert "missing 'markers' line" in exc.value.diagnostics


def test_empty_rule_component_needs_tilde():
    with pytest.raises(FormatError, match="write ~ for the empty word"):
        parse_network(SMALL.replace('(~, "%")', '(, "%")'))


def test_network_round_trip():
    net = parse_network(SMALL)
    text = emit_network(net)
    assert parse_network(text) == net
    assert emit_network(parse_network(text)) == text


def test_machine_file():
    M = parse_machine(TM.replace("tape-alphabet a B", "tape-alphabet a b B"))
    assert [tuple(t) for t in M.transitions] == [("q0", "a", "q1", "b", "R")]
    assert parse_machine(emit_machine(M)) == M


def test_machine_undeclared_symbol():
    with pytest.raises(FormatError) as exc:
        parse_machine(TM)
    assert exc.value.diagnostics == ["line 7: undeclared tape symbol 'b'"]


def test_machine_blank_in_input_alphabet():
    with pytest.raises(FormatError) as exc:
        parse_machine(TM.replace("input-alphabet a", "input-alphabet a B"))
    assert "line 2: blank 'B' listed in the input alphabet" in exc.value.diagnostics


def test_machine_bad_transition_line():
    with pytest.raises(FormatError, match="expected 'trans q a -> s b R|L'"):
        parse_machine(TM.replace("-> q1 b R", "q1 b R"))


@pytest.mark.parametrize("name", SHIPPED)
def test_shipped_files_round_trip(name):
    text = (DATA / name).read_text()
    parse, emit = (parse_machine, emit_machine) if name.endswith(".tm") else (parse_network, emit_network)
    first = parse(text)
    assert parse(emit(first)) == first


@pytest.mark.parametrize("name", ["even-as", "anbn", "palindromes"])
def test_shipped_files_match_the_samples(name, machines, compiled):
    assert parse_machine((DATA / f"{name}.tm").read_text()) == machines[name]
    assert parse_network((DATA / f"{name}.nusp").read_text()) == compiled[name].network


def test_compiled_network_round_trip(compiled):
    for cn in compiled.values():
        text = emit_network(cn.network, legend=cn.symbol_legend, header="compiled")
        assert parse_network(text) == cn.network


def test_trace_round_trip(compiled):
    _, trace = run(compiled["even-as"].network, w("ab"), full=True)
    text = emit_trace(trace, full=True)
    events = parse_trace(text)
    assert [(e.step, e.kind, e.sizes, e.lost) for e in events] == \
        [(e.step, e.kind, e.sizes, e.lost) for e in trace.events]
    assert emit_trace(trace, full=True) == text


def test_trace_parity_checked(compiled):
    _, trace = run(compiled["even-as"].network, w("ab"))
    lines = emit_trace(trace).splitlines()
    bad = lines[1].replace('"communicate"', '"splice"')
    with pytest.raises(FormatError, match="line 2: step 1 has kind 'splice'"):
        parse_trace("\n".join([lines[0], bad]))
    with pytest.raises(FormatError, match="step 2 follows step 0"):
        parse_trace("\n".join([lines[0], lines[2]]))


symbols = st.text(st.characters(blacklist_categories=("Cs", "Cc")), min_size=1, max_size=6)


@given(symbols)
@settings(max_examples=300)
def test_any_symbol_survives_quoting(s):
    assert tokenize(quote(s)) == [s]
