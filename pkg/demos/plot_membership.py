"""
Reduction matrices as an inequality-defined set
===============================================

Every matrix g of height at most H with -1 <= g(inf) <= 0 and g(x) > 1 is a
classic reduction matrix of x, apart from at most two exceptions with
closed forms. Here this is checked by scanning the whole box.
"""

from pglreduce import membership
from pglreduce.corpus import NAMED
from pglreduce.gl2 import enumerate_by_height

print("matrices of height <= 25:", len(enumerate_by_height(25)))

for name in ("sqrt2", "phi", "(3+sqrt13)/2"):
    x = NAMED[name]
    rep = membership.verify_theorem1(x, 25)
    print(name, "clean" if rep.clean else "MISMATCH", "matched", rep.matched,
          "W1", [str(g) for g in rep.exceptional_w1], "W2", [str(g) for g in rep.exceptional_w2])

    rep = membership.verify_theorem2(x, 25)
    print(name, "slow:", "clean" if rep.clean else "MISMATCH", "matched", rep.matched)
