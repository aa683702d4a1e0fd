"""
Classic continued fractions, exactly
====================================

Expand a quadratic irrational with the map x -> 1/(x - floor x) and look at
the convergents, the error forms delta_i and the reducing matrices.
"""

from pglreduce import QuadIrr, cf_classic

# (3 + sqrt 13)/2 is purely periodic with period [3]
x = QuadIrr(3, 1, 13, 2)
print("quotients:", cf_classic.cf_expand(x, 8))

# each state carries p_i/q_i, the remainder x_i and gamma_i
for s in cf_classic.states(x, 5):
    print(s.i, s.n, f"{s.p}/{s.q}", s.x, s.gamma)

# delta_i shrinks geometrically; float only for display
print([round(float(d), 6) for d in cf_classic.delta_seq(x, 8)])

# every invariant is checked with exact integers; an empty list means all hold
print("failures:", cf_classic.check_invariants(x, 30))
