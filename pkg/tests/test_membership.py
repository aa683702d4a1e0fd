import pytest

from pglreduce.cf_classic import InsufficientDepth, gamma_seq, states
from pglreduce.cf_slow import slow_expand, slow_prefix_length
from pglreduce.exact import QuadIrr
from pglreduce.gl2 import IDENTITY, T, T_INV, Pgl, enumerate_by_height
from pglreduce.membership import (
    in_W,
    in_W1,
    in_W2,
    in_Wp,
    in_Wp1,
    verify_theorem1,
    verify_theorem2,
    w1_element,
    w2_element,
    wp1_element,
)

SQRT2 = QuadIrr(0, 1, 2, 1)
PHI = QuadIrr(1, 1, 5, 2)


def test_in_W_examples():
    g1 = gamma_seq(SQRT2, 1)[0]
    assert in_W(g1, SQRT2)
    assert not in_W(IDENTITY, SQRT2)
    assert not in_W(T, SQRT2)


def test_in_W1_examples():
    assert in_W1(Pgl(0, -1, 1, -2), SQRT2)
    assert not in_W1(gamma_seq(SQRT2, 1)[0], SQRT2)
    assert not in_W1(T, SQRT2)


def test_in_W2_examples():
    assert in_W2(Pgl(-1, 2, 1, -1), SQRT2)
    assert not in_W2(Pgl(-1, 1, 1, 0), SQRT2)  # det +1
    # the W2 formula for phi (n0 = 1) fails because n1 = 1
    assert not in_W2(Pgl(-1, 2, 1, -1), PHI)


def test_exceptional_elements():
    assert w1_element(SQRT2) == Pgl(0, -1, 1, -2)
    assert w2_element(SQRT2) == Pgl(-1, 2, 1, -1)
    assert w2_element(PHI) is None
    assert wp1_element(SQRT2) == Pgl(1, -1, -1, 2)


def test_in_Wp_examples():
    assert in_Wp(Pgl(1, -2, -1, 1), SQRT2)
    assert not in_Wp(T_INV, SQRT2)
    assert in_Wp1(wp1_element(SQRT2), SQRT2)


def test_rational_rejected():
    with pytest.raises(ValueError):
        in_W(T, QuadIrr(1, 0, 0, 2))


@pytest.mark.parametrize("x, w2", [(SQRT2, 1), (PHI, 0)])
def test_theorem1_examples(x, w2):
    rep = verify_theorem1(x, 25, 12)
    assert rep.clean
    assert not rep.missing_from_gamma_set and not rep.extra_in_gamma_set
    assert len(rep.exceptional_w1) == 1 and len(rep.exceptional_w2) == w2


def test_theorem1_tiny_box():
    rep = verify_theorem1(SQRT2, 1, 5)
    assert rep.clean and rep.matched == 1  # only gamma_1 fits


def test_theorem1_insufficient_depth():
    with pytest.raises(InsufficientDepth):
        verify_theorem1(SQRT2, 25, 3)


@pytest.mark.parametrize("x, prefix", [(SQRT2, 1), (SQRT2 - 1, 0), (PHI, 1)])
def test_theorem2_examples(x, prefix):
    rep = verify_theorem2(x, 25, 60)
    assert rep.clean and rep.prefix == prefix
    assert rep.exceptional_w1 == [wp1_element(x)]


def test_theorem2_insufficient_steps():
    with pytest.raises(InsufficientDepth):
        verify_theorem2(SQRT2, 25, 3)


def test_soundness_without_enumeration(corpus100):
    for x in corpus100[:40]:
        for g in gamma_seq(x, 30):
            assert in_W(g, x) and not in_W1(g, x) and not in_W2(g, x)
        for s in slow_expand(x, 120)[slow_prefix_length(x) + 1:]:
            assert in_Wp(s.gamma, x) and not in_Wp1(s.gamma, x)


def test_exceptional_uniqueness_in_box(corpus20):
    box = enumerate_by_height(25)
    for x in corpus20[:8]:
        n1 = states(x, 2)[1].n
        assert [g for g in box if in_W1(g, x)] == [w1_element(x)]
        assert [g for g in box if in_Wp1(g, x)] == [wp1_element(x)]
        assert [g for g in box if in_W2(g, x)] == ([w2_element(x)] if n1 >= 2 else [])


def test_predicates_sign_invariant():
    for g in enumerate_by_height(4):
        neg = Pgl(-g.a, -g.b, -g.c, -g.d)
        for pred in (in_W, in_W1, in_W2, in_Wp, in_Wp1):
            assert pred(g, SQRT2) == pred(neg, SQRT2)


def test_corrupted_exception_is_detected(monkeypatch):
    import pglreduce.membership as m
    monkeypatch.setattr(m, "w1_element", lambda x: Pgl(0, -1, 1, 5))
    rep = m.verify_theorem1(SQRT2, 10)
    assert not rep.clean
    assert rep.exceptional_w1 == [Pgl(0, -1, 1, -2)]
