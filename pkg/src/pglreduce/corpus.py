"""Deterministic test corpora of quadratic irrationals."""

from __future__ import annotations

import random

from .exact import QuadIrr, quad_floor

__all__ = ["SQRT2", "PHI", "NAMED", "random_quad", "random_corpus", "theorem_corpus", "inequivalent_pairs"]

SQRT2 = QuadIrr(0, 1, 2, 1)
PHI = QuadIrr(1, 1, 5, 2)

NAMED = {
    "sqrt2": SQRT2,
    "phi": PHI,
    "sqrt2-1": QuadIrr(-1, 1, 2, 1),
    "-sqrt2": QuadIrr(0, -1, 2, 1),
    "(3+sqrt13)/2": QuadIrr(3, 1, 13, 2),
    "sqrt2+7": QuadIrr(7, 1, 2, 1),
}


def random_quad(rng: random.Random, max_coeff: int = 50, max_d: int = 500) -> QuadIrr:
    """A random irrational ``(a + b sqrt d) / c`` with coefficients bounded by
    ``max_coeff`` and ``2 <= d <= max_d``."""
    while True:
        a = rng.randint(-max_coeff, max_coeff)
        b = rng.choice([k for k in range(-max_coeff, max_coeff + 1) if k])
        c = rng.randint(1, max_coeff)
        d = rng.randint(2, max_d)
        x = QuadIrr(a, b, d, c)
        if not x.is_rational:
            return x


def random_corpus(n: int = 100, seed: int = 20240611, **kw) -> list[QuadIrr]:
    rng = random.Random(seed)
    return [random_quad(rng, **kw) for _ in range(n)]


def theorem_corpus(n: int = 20, seed: int = 7, max_floor: int = 24) -> list[QuadIrr]:
    """The named values followed by random ones with ``|floor(x)| <= max_floor``.

    The floor bound keeps the closed-form exceptional matrices, whose height
    is about ``|floor(x)| + 1``, inside a height-25 box.
    """
    out = [v for k, v in NAMED.items() if k != "sqrt2+7"]
    rng = random.Random(seed)
    while len(out) < n:
        x = random_quad(rng)
        if abs(quad_floor(x)) <= max_floor and x not in out:
            out.append(x)
    return out[:n]


def inequivalent_pairs() -> list[tuple[QuadIrr, QuadIrr]]:
    """Pairs from different quadratic fields, which can never be equivalent."""
    ds = [2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30, 31, 33, 34]
    return [(QuadIrr(0, 1, d1, 1), QuadIrr(1, 1, d2, 2)) for d1, d2 in zip(ds, ds[1:])]
