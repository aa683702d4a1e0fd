"""
When do two expansions start to agree?
======================================

If y = g(x) the quotients of x and y coincide from some pair of indices on.
The bound N(g) depends on g alone; here it is compared with the indices that
actually occur.
"""

from collections import Counter

from pglreduce import hurwitz
from pglreduce.corpus import NAMED
from pglreduce.gl2 import Pgl, act, enumerate_by_height

g = Pgl(2, 1, 1, 1)
b = hurwitz.n_of(g)
print(g, "N =", float(b.n_value), "floor", b.n_floor)

x = NAMED["sqrt2"]
r = hurwitz.sync_indices(g, x)
print("s, t =", r.s, r.t, "common remainder", r.common_remainder)

# slack between the bound and the observed indices over a small box
slack = Counter()
for g in enumerate_by_height(4):
    r = hurwitz.sync_indices(g, x)
    slack[r.bound.n_floor - max(r.s, r.t)] += 1
print(sorted(slack.items()))

# a witness recovered from a shared tail
y = act(Pgl(5, 2, 7, 3), x)
w = hurwitz.equiv_witness(x, y, 20)
print(w, act(w, x) == y)
