"""PGL(2, Z): integer matrices of determinant +-1 modulo sign, acting on the
projective line by ``x -> (a*x + b) / (c*x + d)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exact import INF, QuadIrr, as_quad

__all__ = [
    "Pgl",
    "IDENTITY",
    "EPS",
    "T",
    "T_INV",
    "t_power",
    "det",
    "compose",
    "inverse",
    "act",
    "act_proj",
    "enumerate_by_height",
    "matmul",
]


@dataclass(frozen=True, slots=True)
class Pgl:
    """An element of PGL(2, Z), stored as its canonical representative.

    The sign is fixed so that the bottom row is lexicographically positive:
    ``c > 0``, or ``c == 0`` and ``d > 0``.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        if a * d - b * c not in (1, -1):
            raise ValueError(f"[[{a},{b}],[{c},{d}]] has determinant {a * d - b * c}, not +-1")
        if c < 0 or (c == 0 and d < 0):
            object.__setattr__(self, "a", -a)
            object.__setattr__(self, "b", -b)
            object.__setattr__(self, "c", -c)
            object.__setattr__(self, "d", -d)

    @classmethod
    def from_rows(cls, rows) -> Pgl:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def height(self) -> int:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __matmul__(self, other: Pgl) -> Pgl:
        return Pgl(*matmul(self.entries, other.entries))

    def __call__(self, x):
        if x is INF or isinstance(x, (Fraction, int)):
            return act_proj(self, x)
        return act(self, x)

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def matmul(m, n):
    """Product of two raw 2x2 matrices given as ``(a, b, c, d)`` tuples."""
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


IDENTITY = Pgl(1, 0, 0, 1)
EPS = Pgl(0, 1, 1, 0)
T = Pgl(1, 1, 0, 1)
T_INV = Pgl(1, -1, 0, 1)


def t_power(n: int) -> Pgl:
    """``T**n`` by direct formula."""
    return Pgl(1, n, 0, 1)


def det(g: Pgl) -> int:
    return g.det


def compose(g: Pgl, h: Pgl) -> Pgl:
    """The product ``g h`` (apply ``h`` first)."""
    return g @ h


def inverse(g: Pgl) -> Pgl:
    # adjugate; the determinant sign is absorbed by the projective class
    return Pgl(g.d, -g.b, -g.c, g.a)


def act(g: Pgl, x) -> QuadIrr:
    """Exact Moebius image of a real number."""
    x = as_quad(x)
    A, B, D, C = x.a, x.b, x.d, x.c
    P, Q = g.a * A + g.b * C, g.a * B
    R, S = g.c * A + g.d * C, g.c * B
    den = R * R - S * S * D
    if den == 0:
        raise ZeroDivisionError(f"{x} is the pole of {g}")
    return QuadIrr(P * R - Q * S * D, Q * R - P * S, D, den)


def act_proj(g: Pgl, x):
    """Action on the projective rationals, with ``INF`` for infinity."""
    if x is INF:
        return INF if g.c == 0 else Fraction(g.a, g.c)
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    num, den = g.a * p + g.b * q, g.c * p + g.d * q
    return INF if den == 0 else Fraction(num, den)


@lru_cache(maxsize=8)
def enumerate_by_height(height: int) -> tuple[Pgl, ...]:
    """All canonical elements with entries bounded by ``height`` in absolute value.

    Exhaustive scan of the integer box filtered by determinant, one slice of
    the top-left entry at a time. The result is sorted by entries.
    """
    if height < 1:
        raise ValueError("height must be at least 1")
    r = np.arange(-height, height + 1, dtype=np.int64)
    b, c, d = np.meshgrid(r, r, r, indexing="ij")
    b, c, d = b.ravel(), c.ravel(), d.ravel()
    canonical = (c > 0) | ((c == 0) & (d > 0))
    bc = b * c
    found = []
    for a in r:
        dt = a * d - bc
        mask = canonical & ((dt == 1) | (dt == -1))
        found.extend(zip([int(a)] * int(mask.sum()), b[mask].tolist(), c[mask].tolist(), d[mask].tolist()))
    return tuple(Pgl(*e) for e in sorted(found))
