"""Exact continued-fraction reduction over PGL(2, Z).

Classic and slow continued fractions of quadratic irrationals, the
inequality-defined sets of reducing matrices, and the bound on the index
from which the expansions of ``x`` and ``g(x)`` coincide.
"""

from .exact import INF, QuadIrr, quad_cmp, quad_floor, quad_normalize, quad_recip, rational_cf
from .gl2 import EPS, IDENTITY, T, Pgl, act, act_proj, compose, enumerate_by_height, inverse
from .cf_classic import cf_expand, convergents, delta_seq, gamma_seq, is_convergent, lemma1_select
from .cf_slow import Move, compress_slow_to_classic, gamma_prime_explicit, slow_expand
from .membership import verify_theorem1, verify_theorem2, w1_element, w2_element, wp1_element
from .hurwitz import equiv_witness, m_of, n_of, sync_indices, verify_theorem4
from .textio import parse_matrix, parse_number

__version__ = "0.1.0"
