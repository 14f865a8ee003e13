"""Compile a nondeterministic Turing machine into a network of uniform splicing processors.

The network has four fixed nodes (``In``, ``Sim``, ``Res``, ``Halt``) and two
nodes per transition.  A TM configuration with tape ``beta alpha``, head on
the first cell of ``alpha`` and state ``q`` travels as the word::

    <^{q} alpha $ beta >'

so the head cell sits at the left end and the cell left of the head at the
right end.  One TM move is one lap ``Sim -> T1 -> T2 -> Res -> Sim``:

* ``In`` turns ``< w >`` into ``<^{q0} w B $ >'`` in two splicing steps.
* ``Sim`` consumes the head symbol ``a`` and tags the word with every
  transition ``(q, a, s, b, D)`` that reads it, one copy per transition.
* Right moves: ``T1`` appends ``b`` on the right, ``T2`` tags the left end
  as finished (inserting a blank when the head walks off the written tape).
* Left moves: ``T1`` removes the right-end cell ``c`` and records its index
  ``i`` in the right marker.  The word then bounces between ``T2``, which
  counts the left marker up, and ``T1``, which counts the right marker down.
  ``T2`` may also finish by writing ``c_k b`` at the left end; only copies
  whose right counter reached zero, i.e. ``k == i``, are admitted by ``Res``.
* ``Res`` restores ``>'`` and then ``<^{s}`` (or the accept marker when ``s``
  is accepting) and returns the word to ``Sim`` or sends it to ``Halt``.

Every rule needs a junk symbol that only axioms carry, so words never splice
with each other and axioms never splice with each other.  A word that no
rule applies to vanishes at the next splicing step (literal persistence);
that is how wrong guesses and dead branches are discarded.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .filters import WEAK, Filter
from .network import LITERAL, PERSISTENCE_MODES, Network, UniformProcessor
from .splicing import LAMBDA, SplicingRule, Word
from .turing import LEFT, Transition, TuringMachine

LEFT_INPUT = "<"
RIGHT_INPUT = ">"
RIGHT_WORK = ">'"
SEPARATOR = "$"
ACCEPT = "<^!"
JUNK_E, JUNK_G, JUNK_Z = "%E", "%G", "%Z"
JUNK = frozenset({JUNK_E, JUNK_G, JUNK_Z})

IN, SIM, RES, HALT = "In", "Sim", "Res", "Halt"

# Steps per simulated move: Sim 2, T1 2, T2 2, Res 4, plus 4 per counter
# unit on a left move.  Bootstrap in In takes 4 steps.
BOOTSTRAP_STEPS = 4
MOVE_STEPS = 10
COUNTER_STEPS = 4


class CompileError(ValueError):
    pass


def _tuple_label(t: Transition) -> str:
    return f"{t.state},{t.read},{t.new_state},{t.write},{t.move}"


def state_marker(q: str) -> str:
    return f"<^{{{q}}}"


def guess_marker(t: Transition) -> str:
    return f"<^{{{_tuple_label(t)}}}"


def count_marker(t: Transition, k: int) -> str:
    return f"<^{{{_tuple_label(t)}}}#{k}"


def done_marker(t: Transition) -> str:
    return f"<^{{{_tuple_label(t)}}}!"


def right_marker(t: Transition, j: int) -> str:
    return f">^{{{_tuple_label(t)}}}#{j}"


def pair_nodes(index: int) -> tuple[str, str]:
    return f"T{index}a", f"T{index}b"


@dataclass
class CompiledNetwork:
    network: Network
    machine: TuringMachine
    symbol_legend: dict
    node_legend: dict
    persistence: str = LITERAL
    symbol_order: tuple = ()
    overhead: tuple = (MOVE_STEPS, BOOTSTRAP_STEPS)  # (c1, c0) with time <= c1 * depth + c0
    phase_symbols: frozenset = field(default_factory=frozenset)

    def encode_input(self, w) -> Word:
        return encode_input(self, w)

    def explain(self) -> str:
        return explain(self)


def _prefix_rule(new: Word, site: Word, lookahead=LAMBDA) -> SplicingRule:
    """Replace the word's leading ``site`` by ``new`` (``lookahead`` is kept)."""
    return SplicingRule(tuple(new), (JUNK_Z,), tuple(site), tuple(lookahead))


def _suffix_rule(site: Word, new: Word, lookbehind=LAMBDA) -> SplicingRule:
    """Replace the word's trailing ``site`` by ``new`` (``lookbehind`` is kept)."""
    return SplicingRule(tuple(lookbehind), tuple(site), (JUNK_Z,), tuple(new))


def compile_machine(M: TuringMachine, persistence: str = LITERAL) -> CompiledNetwork:
    problems = M.problems()
    if problems:
        raise CompileError("; ".join(problems))
    if not M.transitions:
        raise CompileError("machine has no transitions")
    if persistence not in PERSISTENCE_MODES:
        raise CompileError(f"unknown persistence mode {persistence!r}")
    if persistence != LITERAL:
        # copies that survive a step re-enter the counter loop out of phase
        raise CompileError("the rule tables rely on literal persistence; "
                           "idle copies would desynchronise the left-move counters")

    gamma = sorted(M.tape_alphabet)
    index = {c: i + 1 for i, c in enumerate(gamma)}
    m = len(gamma)
    looks = [*gamma, SEPARATOR]
    delta = M.transitions
    has_left = any(t.move == LEFT for t in delta)

    legend: dict = {
        LEFT_INPUT: "left input marker",
        RIGHT_INPUT: "right input marker",
        RIGHT_WORK: "working right marker",
        SEPARATOR: "rotation point: the cells right of it lie left of the head",
        ACCEPT: "accept marker, admitted only by Halt",
        JUNK_E: "axiom-only junk (In, left end)",
        JUNK_G: "axiom-only junk (In, right end)",
        JUNK_Z: "axiom-only junk",
    }
    for q in sorted(M.states):
        legend[state_marker(q)] = f"state {q}, word ready in Sim"
    for t in delta:
        legend[guess_marker(t)] = f"transition {t} chosen, head symbol consumed"
        legend[done_marker(t)] = f"transition {t} simulated, waiting for Res"
        top = m if t.move == LEFT else 0
        for j in range(top + 1):
            legend[right_marker(t, j)] = f"transition {t}, right counter {j}"
        if t.move == LEFT:
            for k in range(1, m + 1):
                legend[count_marker(t, k)] = f"transition {t}, left counter {k} ({gamma[k - 1]})"

    clash = set(legend) & M.tape_alphabet
    if clash:
        raise CompileError(f"tape symbols collide with generated symbols: {sorted(clash)}")
    generated = [LEFT_INPUT, RIGHT_INPUT, RIGHT_WORK, SEPARATOR, ACCEPT, *JUNK, *map(state_marker, M.states)]
    for t in delta:
        generated += [guess_marker(t), done_marker(t)]
        generated += [right_marker(t, j) for j in range(m + 1 if t.move == LEFT else 1)]
        if t.move == LEFT:
            generated += [count_marker(t, k) for k in range(1, m + 1)]
    if len(generated) != len(set(generated)):
        dupes = sorted({s for s in generated if generated.count(s) > 1})
        raise CompileError(f"generated symbol names collide: {dupes}")

    U = frozenset(legend) | M.tape_alphabet
    all_right = {s for t in delta for j in range(m + 1 if t.move == LEFT else 1) for s in [right_marker(t, j)]}
    right_zero = {right_marker(t, 0) for t in delta}
    guesses = {guess_marker(t) for t in delta}
    counters = {count_marker(t, k) for t in delta if t.move == LEFT for k in range(1, m + 1)}
    states = {state_marker(q) for q in M.states}
    q0_accepts = M.initial in M.accepting

    processors: dict = {}
    roles: dict = {}

    # In: < w >  ->  <^{q0} w >  ->  <^{q0} w B $ >'
    q0 = state_marker(M.initial)
    in_rules = [
        SplicingRule((q0,), (JUNK_E,), (LEFT_INPUT,), LAMBDA),
        SplicingRule(LAMBDA, (RIGHT_INPUT,), (JUNK_G,), (M.blank,)),
    ]
    in_axioms = {(q0, JUNK_E), (JUNK_G, M.blank, SEPARATOR, RIGHT_WORK)}
    in_permit = {RIGHT_WORK}
    if q0_accepts:
        in_rules.append(SplicingRule((ACCEPT,), (JUNK_E,), (LEFT_INPUT,), LAMBDA))
        in_axioms.add((ACCEPT, JUNK_E))
        in_permit.add(ACCEPT)
    processors[IN] = UniformProcessor(in_rules, in_axioms, Filter(in_permit, JUNK | guesses, WEAK))
    roles[IN] = "In"

    sim_rules, sim_axioms = [], set()
    for t in delta:
        sim_rules.append(_prefix_rule((guess_marker(t),), (state_marker(t.state), t.read)))
        sim_axioms.add((guess_marker(t), JUNK_Z))
    processors[SIM] = UniformProcessor(
        sim_rules, sim_axioms,
        Filter(states | guesses, JUNK | {LEFT_INPUT} | all_right, WEAK))
    roles[SIM] = "Sim"

    res_rules, res_axioms = [], {(JUNK_Z, RIGHT_WORK)}
    for t in delta:
        res_rules.append(_suffix_rule((right_marker(t, 0),), (RIGHT_WORK,)))
    for t in delta:
        target = ACCEPT if t.new_state in M.accepting else state_marker(t.new_state)
        res_rules.append(_prefix_rule((target,), (done_marker(t),)))
        res_axioms.add((target, JUNK_Z))
    processors[RES] = UniformProcessor(
        res_rules, res_axioms,
        Filter(right_zero | states | {ACCEPT}, JUNK | (all_right - right_zero) | counters | guesses, WEAK))
    roles[RES] = "Res"

    processors[HALT] = UniformProcessor((), (), Filter({ACCEPT}, JUNK | all_right, WEAK))
    roles[HALT] = "Halt"

    edges = {frozenset({IN, SIM}), frozenset({RES, SIM}), frozenset({RES, HALT})}
    if q0_accepts:
        edges.add(frozenset({IN, HALT}))

    for i, t in enumerate(delta):
        first, second = pair_nodes(i)
        g, done = guess_marker(t), done_marker(t)
        if t.move == LEFT:
            t1_rules, t1_axioms = [], set()
            for c in gamma:
                t1_rules.append(_suffix_rule((c, RIGHT_WORK), (right_marker(t, index[c]),)))
            for j in range(1, m + 1):
                for x in looks:
                    t1_rules.append(_suffix_rule((right_marker(t, j),), (right_marker(t, j - 1),), lookbehind=(x,)))
            t1_axioms = {(JUNK_Z, right_marker(t, j)) for j in range(m + 1)}
            t1_permit = {g} | {count_marker(t, k) for k in range(1, m + 1)}

            t2_rules = []
            for x in looks:
                t2_rules.append(_prefix_rule((count_marker(t, 1),), (g,), (x,)))
                for k in range(1, m):
                    t2_rules.append(_prefix_rule((count_marker(t, k + 1),), (count_marker(t, k),), (x,)))
                for k in range(1, m + 1):
                    t2_rules.append(_prefix_rule((done, gamma[k - 1], t.write), (count_marker(t, k),), (x,)))
            t2_axioms = {(count_marker(t, k), JUNK_Z) for k in range(1, m + 1)}
            t2_axioms |= {(done, c, t.write, JUNK_Z) for c in gamma}
            t2_permit = {right_marker(t, j) for j in range(m + 1)}
        else:
            t1_rules = [_suffix_rule((RIGHT_WORK,), (t.write, right_marker(t, 0)))]
            t1_axioms = {(JUNK_Z, t.write, right_marker(t, 0))}
            t1_permit = {g}
            t2_rules = [_prefix_rule((done,), (g,), (c,)) for c in gamma]
            t2_rules.append(_prefix_rule((done, M.blank), (g,), (SEPARATOR,)))
            t2_axioms = {(done, JUNK_Z), (done, M.blank, JUNK_Z)}
            t2_permit = {right_marker(t, 0)}
        processors[first] = UniformProcessor(t1_rules, t1_axioms, Filter(t1_permit, JUNK | {done}, WEAK))
        processors[second] = UniformProcessor(
            t2_rules, t2_axioms, Filter(t2_permit, JUNK | states | {ACCEPT}, WEAK))
        roles[first] = f"transition {t}: right end"
        roles[second] = f"transition {t}: left end"
        edges |= {frozenset({SIM, first}), frozenset({first, second}), frozenset({second, RES})}

    net = Network(
        input_alphabet=M.input_alphabet,
        network_alphabet=U,
        left_marker=LEFT_INPUT,
        right_marker=RIGHT_INPUT,
        processors=processors,
        edges=edges,
        input_node=IN,
        halt_node=HALT,
        persistence=persistence,
    )
    c1 = MOVE_STEPS + (COUNTER_STEPS * m if has_left else 0)
    phase = {LEFT_INPUT, ACCEPT} | states | guesses | counters | {done_marker(t) for t in delta}
    return CompiledNetwork(net, M, legend, roles, persistence, tuple(gamma), (c1, BOOTSTRAP_STEPS),
                           frozenset(phase))


def encode_input(cn: CompiledNetwork, w) -> Word:
    w = tuple(w)
    stray = [a for a in w if a not in cn.machine.input_alphabet]
    if stray:
        raise ValueError(f"input word uses symbols outside the input alphabet: {stray}")
    return cn.network.encode(w)


def bootstrap_word(cn: CompiledNetwork, w) -> Word:
    """The word In hands to Sim for input ``w``."""
    return (state_marker(cn.machine.initial), *w, cn.machine.blank, SEPARATOR, RIGHT_WORK)


def explain(cn: CompiledNetwork) -> str:
    from .splicing import show

    net = cn.network
    lines = [f"network: {len(net)} nodes, {len(cn.machine.transitions)} transitions, "
             f"persistence {cn.persistence}",
             f"time bound: {cn.overhead[0]} * depth + {cn.overhead[1]}", "", "roles:"]
    for n in net.nodes:
        lines.append(f"  {n}: {cn.node_legend[n]}")
    lines.append("")
    pair = 0
    for n in net.nodes:
        p = net.processors[n]
        if n.startswith("T") and n.endswith("a"):
            lines.append(f"transition pair {pair}: {cn.machine.transitions[pair]}")
            pair += 1
        lines.append(f"node {n} ({cn.node_legend[n]})")
        lines.append(f"  filter mode {p.filter.mode}")
        lines.append(f"  permit {' '.join(sorted(p.filter.permit))}")
        lines.append(f"  forbid {' '.join(sorted(p.filter.forbid))}")
        for a in sorted(p.axioms):
            lines.append(f"  axiom {show(a)}")
        for r in p.rules:
            lines.append(f"  rule {r}")
        lines.append(f"  neighbours {' '.join(net.neighbours(n))}")
    lines += ["", "legend:"]
    for s in sorted(cn.symbol_legend):
        lines.append(f"  {s}: {cn.symbol_legend[s]}")
    for s in sorted(cn.machine.tape_alphabet):
        lines.append(f"  {s}: tape symbol" + (" (blank)" if s == cn.machine.blank else ""))
    return "\n".join(lines)
