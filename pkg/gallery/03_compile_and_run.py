"""
Compiling a Turing machine
==========================

The compiler turns a nondeterministic Turing machine into a network with
four fixed nodes and two nodes per transition.  A configuration of the
machine travels around the network as one word.
"""

from nusp import chars, compile_machine, run, tm_run
from nusp.machines import palindromes
from nusp.splicing import show

M = palindromes()
cn = compile_machine(M)
print(len(M.transitions), "transitions ->", len(cn.network), "nodes")
print("\n".join(cn.explain().splitlines()[:12]))

x = chars("abba")
verdict, trace = run(cn.network, x, keep_configurations=True)
print(verdict, "| machine:", tm_run(M, x))

# watch the first lap: bootstrap in In, then Sim guesses a transition
for k in range(8):
    C = trace.configuration(k)
    busy = {n: sorted(show(w) for w in C[n]) for n in cn.network.nodes if C[n]}
    print(k, busy)
