"""
Splicing two words
==================

A rule ``[(u1, u2); (v1, v2)]`` cuts ``x`` between ``u1`` and ``u2``, cuts
``y`` between ``v1`` and ``v2``, and glues the left part of ``x`` to the
right part of ``y``.  Only that one product is kept.
"""

from nusp import SplicingRule, chars, sigma, splice_pair
from nusp.oracles import naive_sigma
from nusp.splicing import show

rule = SplicingRule(chars("a"), chars("b"), chars("c"), chars("d"))
print(rule)
print(sorted(show(z) for z in splice_pair(rule, chars("ab"), chars("cd"))))

# every occurrence counts, overlapping ones too
r = SplicingRule(chars("a"), chars("a"), chars("a"), chars("a"))
print(sorted(show(z) for z in sigma([r], {chars("aaa")})))

# empty components cut anywhere: all prefix/suffix products
anywhere = SplicingRule()
print(sorted(show(z) for z in sigma([anywhere], {chars("ab")})))

# the fast implementation against the slicing reference
L = {chars("abc"), chars("cab"), chars("bb")}
rules = [SplicingRule(chars("b"), (), (), chars("c")), SplicingRule((), chars("a"), chars("b"), ())]
assert sigma(rules, L) == naive_sigma(rules, L)
print(len(sigma(rules, L)), "products, reference agrees")
