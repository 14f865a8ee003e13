"""Text formats for networks, Turing machines and run traces.

Network file::

    alphabet input a b
    alphabet network a b < > ...
    markers < >
    persistence literal
    input-node In
    halt-node Halt
    node In
      mode w
      permit ">'"
      forbid %E %G
      axiom "<^{q0}" %E
      rule ("<^{q0}", %E); (<, ~)
    edge In Sim

Tokens are bare when they contain no whitespace, double quote, parenthesis,
comma or semicolon; otherwise they are double-quoted with backslash escapes.
``~`` is the empty word.  Lines whose first non-blank character is ``#`` are
comments.

Machine file::

    states q0 q1 acc
    input-alphabet a b
    tape-alphabet a b B
    blank B
    initial q0
    accepting acc
    trans q0 a -> q1 b R

Trace file: one JSON object per line and per step.
"""

from __future__ import annotations

import json
import re

from .filters import MODES, Filter
from .network import COMMUNICATE, PERSISTENCE_MODES, SPLICE, Network, TraceEvent, UniformProcessor
from .splicing import SplicingRule
from .turing import TuringMachine

_TOKEN = re.compile(r'"(?:[^"\\]|\\.)*"|[(),;]|[^\s"(),;]+')
_BARE = re.compile(r'[^\s"(),;]+')
EMPTY = "~"


class FormatError(ValueError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(self.diagnostics))


class Tok(str):
    """A lexed token; ``quoted`` distinguishes ``"~"`` from the empty-word mark."""

    quoted = False


def tokenize(line: str, lineno: int = 0) -> list:
    out = []
    pos = 0
    line = line.strip()
    while pos < len(line):
        if line[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(line, pos)
        if not m:
            raise FormatError([f"line {lineno}: unterminated quote"])
        text = m.group(0)
        if text.startswith('"'):
            tok = Tok(re.sub(r"\\(.)", r"\1", text[1:-1]))
            tok.quoted = True
        else:
            tok = Tok(text)
        out.append(tok)
        pos = m.end()
    return out


def quote(token: str) -> str:
    if token and _BARE.fullmatch(token) and token != EMPTY and not token.startswith("#"):
        return token
    return '"' + token.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_word(w) -> str:
    return " ".join(quote(t) for t in w) if w else EMPTY


def _word(tokens) -> tuple:
    if len(tokens) == 1 and tokens[0] == EMPTY and not tokens[0].quoted:
        return ()
    if any(t == EMPTY and not t.quoted for t in tokens):
        raise ValueError("'~' must stand alone")
    return tuple(str(t) for t in tokens)


def _parse_rule(tokens) -> SplicingRule:
    # ( W , W ) ; ( W , W )
    parts, current, depth, seen = [], [], 0, []
    for t in tokens:
        if not t.quoted and t in "(),;" and len(t) == 1:
            seen.append(str(t))
            if t == "(":
                depth += 1
                current = []
            elif t in ",)":
                parts.append(current)
                current = []
                if t == ")":
                    depth -= 1
        else:
            if depth != 1:
                raise ValueError("rule components must sit inside parentheses")
            current.append(t)
    if seen != ["(", ",", ")", ";", "(", ",", ")"] or len(parts) != 4:
        raise ValueError("expected rule (u1, u2); (v1, v2)")
    if not all(parts):
        raise ValueError("empty rule component; write ~ for the empty word")
    return SplicingRule(*(_word(p) for p in parts))


def emit_rule(r: SplicingRule) -> str:
    return f"({emit_word(r.u1)}, {emit_word(r.u2)}); ({emit_word(r.v1)}, {emit_word(r.v2)})"


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, tokenize(stripped, lineno)


NODE_KEYS = ("mode", "permit", "forbid", "axiom", "rule")


def parse_network(text: str) -> Network:
    diags = []
    input_alpha = network_alpha = markers = None
    persistence = "literal"
    input_node = halt_node = None
    nodes: dict = {}
    node_lines: dict = {}
    edges = []
    current = None

    for lineno, toks in _lines(text):
        head, args = toks[0], toks[1:]
        try:
            if head == "alphabet":
                if not args or args[0] not in ("input", "network"):
                    raise ValueError("expected 'alphabet input ...' or 'alphabet network ...'")
                syms = frozenset(map(str, args[1:]))
                if args[0] == "input":
                    input_alpha = syms
                else:
                    network_alpha = syms
                current = None
            elif head == "markers":
                if len(args) != 2:
                    raise ValueError("expected two marker symbols")
                markers = (str(args[0]), str(args[1]))
                current = None
            elif head == "persistence":
                if len(args) != 1 or args[0] not in PERSISTENCE_MODES:
                    raise ValueError(f"persistence must be one of {', '.join(PERSISTENCE_MODES)}")
                persistence = str(args[0])
                current = None
            elif head in ("input-node", "halt-node"):
                if len(args) != 1:
                    raise ValueError(f"expected '{head} NAME'")
                if head == "input-node":
                    input_node = str(args[0])
                else:
                    halt_node = str(args[0])
                current = None
            elif head == "node":
                if len(args) != 1:
                    raise ValueError("expected 'node NAME'")
                name = str(args[0])
                if name in nodes:
                    raise ValueError(f"duplicate node name {name!r} (first declared on line {node_lines[name]})")
                nodes[name] = {"mode": "w", "permit": set(), "forbid": set(), "axioms": set(), "rules": [],
                               "line": lineno}
                node_lines[name] = lineno
                current = name
            elif head == "edge":
                if len(args) != 2:
                    raise ValueError("expected 'edge X Y'")
                edges.append((str(args[0]), str(args[1]), lineno))
                current = None
            elif head in NODE_KEYS:
                if current is None:
                    raise ValueError(f"'{head}' outside a node block")
                spec = nodes[current]
                if head == "mode":
                    if len(args) != 1 or args[0] not in MODES:
                        raise ValueError("mode must be 's' or 'w'")
                    spec["mode"] = str(args[0])
                elif head in ("permit", "forbid"):
                    spec[head].update(map(str, args))
                    spec.setdefault(head + "_lines", []).append((lineno, [str(a) for a in args]))
                elif head == "axiom":
                    if not args:
                        raise ValueError("axiom needs a word (use ~ for the empty word)")
                    spec["axioms"].add(_word(args))
                    spec.setdefault("sym_lines", []).append((lineno, [str(a) for a in _word(args)]))
                else:
                    rule = _parse_rule(args)
                    spec["rules"].append(rule)
                    spec.setdefault("sym_lines", []).append((lineno, sorted(rule.symbols())))
            else:
                raise ValueError(f"unknown section {str(head)!r}")
        except ValueError as exc:
            if isinstance(exc, FormatError):
                diags.extend(exc.diagnostics)
            else:
                diags.append(f"line {lineno}: {exc}")

    for label, value in (("alphabet input", input_alpha), ("alphabet network", network_alpha),
                         ("markers", markers), ("input-node", input_node), ("halt-node", halt_node)):
        if value is None:
            diags.append(f"missing '{label}' line")
    U = network_alpha or frozenset()
    if network_alpha is not None:
        for name, spec in nodes.items():
            for key in ("permit_lines", "forbid_lines", "sym_lines"):
                for lineno, syms in spec.get(key, []):
                    for s in syms:
                        if s not in U:
                            diags.append(f"line {lineno}: undeclared symbol {s!r} in node {name!r}")
        if markers:
            for s in markers:
                if s not in U:
                    diags.append(f"undeclared marker symbol {s!r}")
        if input_alpha:
            for s in sorted(input_alpha - U):
                diags.append(f"input symbol {s!r} missing from the network alphabet")
    for x, y, lineno in edges:
        for n in (x, y):
            if n not in nodes:
                diags.append(f"line {lineno}: edge names undeclared node {n!r}")
        if x == y:
            diags.append(f"line {lineno}: self-loop on node {x!r}")
    for label, n in (("input-node", input_node), ("halt-node", halt_node)):
        if n is not None and n not in nodes:
            diags.append(f"{label} {n!r} is not a declared node")
    if diags:
        raise FormatError(diags)

    processors = {
        name: UniformProcessor(spec["rules"], spec["axioms"],
                               Filter(spec["permit"], spec["forbid"], spec["mode"]))
        for name, spec in nodes.items()
    }
    return Network(input_alpha, network_alpha, markers[0], markers[1], processors,
                   {frozenset((x, y)) for x, y, _ in edges}, input_node, halt_node, persistence)


def emit_network(net: Network, legend: dict | None = None, header: str = "") -> str:
    out = []
    for line in header.splitlines():
        out.append(f"# {line}".rstrip())
    if legend:
        out.append("# legend:")
        for s in sorted(legend):
            out.append(f"#   {s} : {legend[s]}")
    w = lambda syms: " ".join(quote(s) for s in sorted(syms))  # noqa: E731
    out.append(f"alphabet input {w(net.input_alphabet)}".rstrip())
    out.append(f"alphabet network {w(net.network_alphabet)}".rstrip())
    out.append(f"markers {quote(net.left_marker)} {quote(net.right_marker)}")
    out.append(f"persistence {net.persistence}")
    out.append(f"input-node {quote(net.input_node)}")
    out.append(f"halt-node {quote(net.halt_node)}")
    for name, p in net.processors.items():
        out.append(f"node {quote(name)}")
        out.append(f"  mode {p.filter.mode}")
        out.append(f"  permit {w(p.filter.permit)}".rstrip())
        out.append(f"  forbid {w(p.filter.forbid)}".rstrip())
        for a in sorted(p.axioms):
            out.append(f"  axiom {emit_word(a)}")
        for r in p.rules:
            out.append(f"  rule {emit_rule(r)}")
    order = {n: i for i, n in enumerate(net.processors)}
    pairs = sorted((sorted(e, key=lambda n: order.get(n, len(order))) for e in net.edges),
                   key=lambda p: [order.get(n, len(order)) for n in p])
    for x, y in pairs:
        out.append(f"edge {quote(x)} {quote(y)}")
    return "\n".join(out) + "\n"


MACHINE_KEYS = ("states", "input-alphabet", "tape-alphabet", "blank", "initial", "accepting", "trans")


def parse_machine(text: str) -> TuringMachine:
    diags = []
    fields: dict = {}
    delta = []
    for lineno, toks in _lines(text):
        head, args = str(toks[0]), [str(a) for a in toks[1:]]
        if head not in MACHINE_KEYS:
            diags.append(f"line {lineno}: unknown section {head!r}")
            continue
        if head == "trans":
            if len(args) != 6 or args[2] != "->" or args[5] not in ("L", "R"):
                diags.append(f"line {lineno}: expected 'trans q a -> s b R|L'")
                continue
            delta.append((args[0], args[1], args[3], args[4], args[5], lineno))
            continue
        if head in fields:
            diags.append(f"line {lineno}: duplicate '{head}' line")
            continue
        if head in ("blank", "initial") and len(args) != 1:
            diags.append(f"line {lineno}: '{head}' takes exactly one name")
            continue
        fields[head] = (lineno, args)
    for key in MACHINE_KEYS[:-1]:
        if key not in fields and key != "accepting":
            diags.append(f"missing '{key}' line")
    if diags:
        raise FormatError(diags)
    states = set(fields["states"][1])
    sigma_ = set(fields["input-alphabet"][1])
    gamma = set(fields["tape-alphabet"][1])
    blank = fields["blank"][1][0]
    initial = fields["initial"][1][0]
    accepting = set(fields.get("accepting", (0, []))[1])
    if blank in sigma_:
        diags.append(f"line {fields['input-alphabet'][0]}: blank {blank!r} listed in the input alphabet")
    if blank not in gamma:
        diags.append(f"line {fields['blank'][0]}: blank {blank!r} is not in the tape alphabet")
    for s in sorted(sigma_ - gamma):
        diags.append(f"line {fields['input-alphabet'][0]}: input symbol {s!r} missing from the tape alphabet")
    if initial not in states:
        diags.append(f"line {fields['initial'][0]}: undeclared state {initial!r}")
    for s in sorted(accepting - states):
        diags.append(f"line {fields['accepting'][0]}: undeclared state {s!r}")
    for q, a, s, b, _d, lineno in delta:
        for name in (q, s):
            if name not in states:
                diags.append(f"line {lineno}: undeclared state {name!r}")
        for name in (a, b):
            if name not in gamma:
                diags.append(f"line {lineno}: undeclared tape symbol {name!r}")
    if diags:
        raise FormatError(diags)
    return TuringMachine(states, sigma_, gamma, blank, [t[:5] for t in delta], initial, accepting)


def emit_machine(M: TuringMachine, header: str = "") -> str:
    q = lambda syms: " ".join(quote(s) for s in sorted(syms))  # noqa: E731
    out = [f"# {line}".rstrip() for line in header.splitlines()]
    out += [
        f"states {q(M.states)}",
        f"input-alphabet {q(M.input_alphabet)}",
        f"tape-alphabet {q(M.tape_alphabet)}",
        f"blank {quote(M.blank)}",
        f"initial {quote(M.initial)}",
        f"accepting {q(M.accepting)}".rstrip(),
    ]
    for t in M.transitions:
        out.append(f"trans {quote(t.state)} {quote(t.read)} -> {quote(t.new_state)} {quote(t.write)} {t.move}")
    return "\n".join(out) + "\n"


def emit_trace(trace, full: bool = False) -> str:
    lines = []
    for e in trace.events:
        rec = {"step": e.step, "kind": e.kind, "sizes": [[n, k] for n, k in zip(trace.nodes, e.sizes)],
               "lost": e.lost}
        if full:
            if e.contents is None:
                raise ValueError("trace was recorded without node contents")
            rec["contents"] = [[n, [list(w) for w in e.contents[n]]] for n in trace.nodes]
        lines.append(json.dumps(rec, ensure_ascii=False, separators=(",", ":")))
    return "".join(line + "\n" for line in lines)


def parse_trace(text: str) -> list:
    events = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        try:
            rec = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise FormatError([f"line {lineno}: {exc}"]) from None
        step, kind = rec.get("step"), rec.get("kind")
        expected = events[-1].step + 1 if events else 0
        if step != expected:
            raise FormatError([f"line {lineno}: step {step} follows step {expected - 1}"])
        if kind != (SPLICE if step % 2 == 0 else COMMUNICATE):
            raise FormatError([f"line {lineno}: step {step} has kind {kind!r}"])
        contents = None
        if "contents" in rec:
            contents = {n: [tuple(w) for w in ws] for n, ws in rec["contents"]}
        events.append(TraceEvent(step, kind, tuple(k for _, k in rec["sizes"]), rec.get("lost", 0), contents))
    return events
