"""
Filters and one communication step
==================================

A node keeps the words its own filter rejects and sends the rest out.  A
word arrives at a neighbour only if it also passes that neighbour's filter;
a word no neighbour accepts is lost.
"""

from nusp import STRONG, WEAK, Configuration, Filter, Network, UniformProcessor, chars, communication_step
from nusp.splicing import show

f_strong = Filter({"a", "b"}, {"d"}, STRONG)
f_weak = Filter({"a", "b"}, {"d"}, WEAK)
for z in ["abc", "ac", "ad"]:
    print(z, f_strong(chars(z)), f_weak(chars(z)))

net = Network(
    input_alphabet={"a", "b"}, network_alphabet={"a", "b", "<", ">"},
    left_marker="<", right_marker=">",
    processors={
        "x": UniformProcessor(filter=Filter({"a"}, set(), WEAK)),
        "y": UniformProcessor(filter=Filter({"b"}, set(), WEAK)),
        "z": UniformProcessor(filter=Filter({"c"}, set(), WEAK)),
    },
    edges=[{"x", "y"}, {"x", "z"}], input_node="x", halt_node="z",
)

before = Configuration({"x": {chars("ab"), chars("aa"), chars("bb")}})
after, lost = communication_step(net, before)
for node in net.nodes:
    print(node, sorted(show(w) for w in after[node]))
print("lost", sorted(show(w) for w in lost))
