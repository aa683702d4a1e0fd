"""
The slow continued fraction
===========================

The slow algorithm moves by x+1, 1/x - 1 and x-1 one step at a time.
Grouping the moves recovers the classic quotients.
"""

from pglreduce import cf_classic, cf_slow
from pglreduce.corpus import NAMED

x = NAMED["sqrt2+7"]
sts = cf_slow.slow_expand(x, 30)
print([s.move.name for s in sts[:10]])

# the first |floor x| steps are pure translations
print("prefix:", cf_slow.slow_prefix_length(x))

moves = [s.move for s in sts]
print(cf_slow.compress_slow_to_classic(moves))
print(cf_classic.cf_expand(x, 5))

# the generated matrices after the prefix agree with the closed-form set
print(cf_slow.post_prefix_set(x, 4) == cf_slow.gamma_prime_explicit(x, 4))
