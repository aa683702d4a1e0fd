import random
from decimal import Decimal
from fractions import Fraction
from types import SimpleNamespace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pglreduce.exact import (
    INF,
    QuadIrr,
    fold_cf,
    quad_cmp,
    quad_floor,
    quad_normalize,
    quad_recip,
    rational_cf,
)
from pglreduce.corpus import random_quad

from .oracles import dec, euclid_quotients

SQRT2 = QuadIrr(0, 1, 2, 1)
PHI = QuadIrr(1, 1, 5, 2)


@st.composite
def quads(draw, irrational=False):
    a = draw(st.integers(-50, 50))
    b = draw(st.integers(-50, 50))
    d = draw(st.integers(0, 500))
    c = draw(st.integers(1, 50)) * draw(st.sampled_from([1, -1]))
    x = QuadIrr(a, b, d, c)
    if irrational and x.is_rational:
        x = QuadIrr(a, b or 1, 2, c)
    return x


def test_normalize_absorbs_square_factor():
    x = quad_normalize(2, 2, 8, 2)
    assert (x.a, x.b, x.d, x.c) == (1, 2, 2, 1)
    raw = SimpleNamespace(a=2, b=2, d=8, c=2)
    assert abs(dec(raw) - dec(x)) < Decimal(10) ** -190


@pytest.mark.parametrize("args, expected", [
    ((3, 0, 5, 3), Fraction(1)),
    ((1, 1, 4, 1), Fraction(3)),
    ((5, 3, 0, -10), Fraction(-1, 2)),
    ((7, 2, 1, 3), Fraction(3)),
])
def test_normalize_rational_collapse(args, expected):
    x = quad_normalize(*args)
    assert x.is_rational and x.as_fraction() == expected
    assert (x.b, x.d) == (0, 0)


def test_normalize_rejects():
    with pytest.raises(ZeroDivisionError):
        quad_normalize(1, 1, 2, 0)
    with pytest.raises(ValueError):
        quad_normalize(1, 1, -2, 1)


def test_cmp_examples():
    assert quad_cmp(PHI, 1) == 1
    assert quad_cmp(SQRT2, Fraction(3, 2)) == -1
    assert quad_cmp(PHI, QuadIrr(2, 2, 5, 4)) == 0


def test_floor_examples():
    assert quad_floor(PHI) == 1
    assert quad_floor(-SQRT2) == -2
    assert quad_floor(Fraction(355, 113)) == euclid_quotients(355, 113)[0] == 3


def test_recip_examples():
    assert quad_recip(SQRT2 - 1) == SQRT2 + 1
    assert quad_recip(Fraction(1, 2)) == 2
    assert quad_recip(PHI) == QuadIrr(-1, 1, 5, 2)
    with pytest.raises(ZeroDivisionError):
        quad_recip(QuadIrr(0))


@pytest.mark.parametrize("alpha", [Fraction(1, 2), Fraction(5), Fraction(355, 113), Fraction(-7, 3), Fraction(0)])
def test_rational_cf_matches_euclid(alpha):
    assert rational_cf(alpha) == euclid_quotients(alpha.numerator, alpha.denominator)


def test_rational_cf_examples():
    assert rational_cf(Fraction(1, 2)) == [0, 2]
    assert rational_cf(5) == [5]
    assert rational_cf(Fraction(355, 113)) == [3, 7, 16]


@given(st.fractions())
def test_rational_cf_folds_back_and_ends_ge_2(alpha):
    cf = rational_cf(alpha)
    assert fold_cf(cf) == alpha
    assert len(cf) == 1 or cf[-1] >= 2
    assert all(n >= 1 for n in cf[1:])


def test_cmp_agrees_with_decimal_oracle_1000():
    rng = random.Random(1)
    for _ in range(1000):
        x, y = random_quad(rng), random_quad(rng)
        if rng.random() < 0.3:
            y = QuadIrr(y.a, y.b, x.d, y.c)  # same field, closer values
        diff = dec(x) - dec(y)
        expected = (diff > 0) - (diff < 0)
        assert quad_cmp(x, y) == expected, (x, y)


@settings(max_examples=300)
@given(quads())
def test_floor_brackets(x):
    n = quad_floor(x)
    assert n <= x < n + 1


@settings(max_examples=300)
@given(quads())
def test_recip_involution(x):
    if x == 0:
        return
    assert quad_recip(quad_recip(x)) == x
    assert quad_recip(x) * x == 1


@given(quads(), st.integers(1, 30))
def test_normalize_idempotent_and_canonical(x, k):
    assert QuadIrr(x.a, x.b, x.d, x.c) == x
    # same value written with a scaled numerator/denominator and a square factor
    assert QuadIrr(k * x.a, x.b * k, x.d * 1, k * x.c) == x
    if x.d:
        assert QuadIrr(2 * k * x.a, k * x.b, 4 * x.d, 2 * k * x.c) == x
    assert hash(QuadIrr(-x.a, -x.b, x.d, -x.c)) == hash(x)


def test_rational_quad_equals_fraction():
    assert QuadIrr(1, 0, 0, 2) == Fraction(1, 2)
    assert hash(QuadIrr(1, 0, 0, 2)) == hash(Fraction(1, 2))
    assert QuadIrr(6, 0, 0, 3) == 2


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        QuadIrr(0, 1, 2, 1) + QuadIrr(0, 1, 3, 1)


def test_infinity_has_no_order():
    assert INF == INF and INF != Fraction(0)
    with pytest.raises(TypeError):
        INF < 1
    with pytest.raises(TypeError):
        Fraction(1) <= INF


def test_str_grammar():
    assert str(QuadIrr(-3)) == "-3"
    assert str(QuadIrr(355, 0, 0, 113)) == "355/113"
    assert str(PHI) == "quad(1,1,5,2)"
