"""Acceptance gate: one test per criterion, each with its runtime budget.

A summary line per criterion is printed at the end of the run by the hook in
conftest.py.
"""

import random
import time

import pytest

from pglreduce.cf_classic import (
    InsufficientDepth,
    cf_expand,
    check_invariants,
    farey_brackets,
    is_convergent,
    legendre_candidates,
    lemma1_select,
    states,
)
from pglreduce.cf_slow import compress_slow_to_classic, gamma_prime_explicit, post_prefix_set, slow_expand
from pglreduce.corpus import PHI, SQRT2, inequivalent_pairs, random_quad
from pglreduce.exact import quad_floor
from pglreduce.gl2 import Pgl, act, enumerate_by_height
from pglreduce.hurwitz import equiv_witness, sync_indices
from pglreduce.membership import verify_theorem1, verify_theorem2, w1_element, w2_element


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f}s, budget {self.seconds}s"


def test_c01_determinant_identity(corpus100):
    with Budget(5):
        for x in corpus100:
            sts = states(x, 31)
            for i in range(30):
                s, t = sts[i], sts[i + 1]
                assert t.p * s.q - s.p * t.q == (-1) ** i, (x, i)


def test_c02_inequalities_delta_chain_signed_identities(corpus100):
    # every inequality as printed, on every corpus value
    with Budget(10):
        failures = {str(x): f for x in corpus100 if (f := check_invariants(x, 30))}
    assert not failures, failures


def test_c02_supplement_all_but_p_bounds_on_unit_interval(corpus100):
    # same checks; the p bounds only where floor(x) is outside {-1, 0}
    p_checks = {"ineq2_p_monotone", "ineq4_p_fibonacci"}
    with Budget(10):
        for x in corpus100:
            fails = check_invariants(x, 30)
            if quad_floor(x) in (-1, 0):
                fails = [f for f in fails if f["check"] not in p_checks]
            assert fails == [], (x, fails)


def test_c03_legendre(corpus100):
    with Budget(30):
        for x in corpus100:
            for pq in legendre_candidates(x, 50):
                assert is_convergent(pq, x), (x, pq)


def test_c04_lemma1(corpus100):
    with Budget(60):
        for x in corpus100:
            for rt, su in farey_brackets(x, 30):
                assert lemma1_select(rt, su, x), (x, rt, su)


def test_c05_theorem1(corpus20):
    with Budget(600):
        for x in corpus20:
            rep = verify_theorem1(x, 25)
            assert rep.clean, rep.to_json()
            assert len(rep.exceptional_w1) == 1
            assert len(rep.exceptional_w2) == (1 if states(x, 2)[1].n >= 2 else 0)
            assert states(x, rep.depth)[-1].q > 25
        with pytest.raises(InsufficientDepth):
            verify_theorem1(corpus20[0], 25, 2)


def test_c06_theorem2(corpus20):
    with Budget(600):
        for x in corpus20:
            rep = verify_theorem2(x, 25)
            assert rep.clean, rep.to_json()
            assert len(rep.exceptional_w1) == 1


def test_c07_explicit_slow_set(corpus20):
    with Budget(10):
        for x in corpus20:
            assert post_prefix_set(x, 8) == gamma_prime_explicit(x, 8), x


def test_c08_slow_compression(corpus20):
    with Budget(5):
        for x in corpus20:
            decoded = compress_slow_to_classic([s.move for s in slow_expand(x, 200)])
            assert decoded and decoded == cf_expand(x, len(decoded)), x


def test_c09_synchronization_bound(corpus20):
    with Budget(900):
        box = enumerate_by_height(10)
        for x in corpus20:
            for g in box:
                r = sync_indices(g, x)
                assert r.within_bound, r.to_json()
        rng = random.Random(9)
        for _ in range(50):
            g = Pgl(rng.choice((1, -1)), rng.randint(-100, 100), 0, 1)
            x = random_quad(rng)
            r = sync_indices(g, x)
            assert r.s <= 3 and r.t <= 3, (g, x)


def test_c10_witness_loop_closure():
    with Budget(60):
        rng = random.Random(10)
        box = enumerate_by_height(10)
        for _ in range(100):
            x, g = random_quad(rng), rng.choice(box)
            y = act(g, x)
            w = equiv_witness(x, y, 40)
            assert w is not None and act(w, x) == y, (x, g)
        pairs = inequivalent_pairs()
        assert len(pairs) == 20
        for x, y in pairs:
            assert equiv_witness(x, y, 40) is None, (x, y)


def test_c11_golden_values():
    with Budget(1):
        assert cf_expand(PHI, 10) == [1] * 10
        assert cf_expand(SQRT2, 10) == [1] + [2] * 9
        assert w1_element(SQRT2) == Pgl(0, -1, 1, -2)
        assert w2_element(PHI) is None
