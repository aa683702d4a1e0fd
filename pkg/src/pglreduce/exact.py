"""Exact arithmetic: rationals, the projective point at infinity, and real
quadratic irrationals ``(a + b*sqrt(d)) / c``.

Rationals are plain :class:`fractions.Fraction` values. A projective rational
is either a ``Fraction`` or the singleton :data:`INF`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from numbers import Rational as _RationalABC

__all__ = [
    "INF",
    "QuadIrr",
    "quad_normalize",
    "quad_cmp",
    "quad_floor",
    "quad_recip",
    "rational_cf",
    "fold_cf",
    "as_quad",
]


class _Infinity:
    """The point at infinity of the projective line.

    It compares equal only to itself; order comparisons raise ``TypeError``.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())

    def __hash__(self):
        return hash("pglreduce.INF")

    def __eq__(self, other):
        return other is self

    def _no_order(self, other):
        raise TypeError("infinity has no order; test for INF explicitly")

    __lt__ = __le__ = __gt__ = __ge__ = _no_order


INF = _Infinity()


@lru_cache(maxsize=4096)
def _split_square(d: int) -> tuple[int, int]:
    """Return ``(s, k)`` with ``d == s*s*k`` and ``k`` squarefree."""
    s, k = 1, 1
    p = 2
    while p * p <= d:
        e = 0
        while d % p == 0:
            d //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            k *= p
        p += 1 if p == 2 else 2
    return s, k * d


@total_ordering
@dataclass(frozen=True, slots=True)
class QuadIrr:
    """The real number ``(a + b*sqrt(d)) / c`` in canonical form.

    Construction always canonicalizes: ``d`` squarefree, ``c > 0``,
    ``gcd(a, b, c) == 1``, and rational values stored with ``b == d == 0``.
    Equal values therefore have equal fields.
    """

    a: int
    b: int = 0
    d: int = 0
    c: int = 1

    def __post_init__(self):
        a, b, d, c = self.a, self.b, self.d, self.c
        if c == 0:
            raise ZeroDivisionError("quadratic irrational with zero denominator")
        if d < 0:
            raise ValueError(f"negative radicand {d}: complex values are not supported")
        if b != 0 and d > 1:
            s, d = _split_square(d)
            b *= s
        if b == 0 or d <= 1:
            a, b, d = a + b * d, 0, 0  # sqrt(1) == 1, sqrt(0) == 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(a, b, c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "c", c)

    # -- conversions -------------------------------------------------------

    @classmethod
    def from_fraction(cls, q) -> QuadIrr:
        q = Fraction(q)
        return cls(q.numerator, 0, 0, q.denominator)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.a, self.c)

    def conjugate(self) -> QuadIrr:
        return QuadIrr(self.a, -self.b, self.d, self.c)

    def __float__(self):
        return (self.a + self.b * math.sqrt(self.d)) / self.c

    def __str__(self):
        if self.b == 0:
            return str(self.a) if self.c == 1 else f"{self.a}/{self.c}"
        return f"quad({self.a},{self.b},{self.d},{self.c})"

    def __repr__(self):
        return f"QuadIrr({self.a}, {self.b}, {self.d}, {self.c})"

    # -- order ---------------------------------------------------------------

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        sb = 1 if b > 0 else -1
        if a == 0 or (a > 0) == (b > 0):
            return sb
        # opposite signs: the larger of |a| and |b|*sqrt(d) wins, never a tie
        return -sb if a * a > b * b * self.d else sb

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.a, self.b, self.d, self.c) == (other.a, other.b, other.d, other.c)

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.c))
        return hash((self.a, self.b, self.d, self.c))

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return quad_cmp(self, other) < 0

    def __floor__(self):
        return quad_floor(self)

    # -- field operations ----------------------------------------------------

    def _radicand(self, other: QuadIrr) -> int:
        if self.d and other.d and self.d != other.d:
            raise ValueError(f"mixed quadratic fields sqrt({self.d}) and sqrt({other.d})")
        return self.d or other.d

    def __neg__(self):
        return QuadIrr(-self.a, -self.b, self.d, self.c)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._radicand(other)
        c1, c2 = self.c, other.c
        return QuadIrr(self.a * c2 + other.a * c1, self.b * c2 + other.b * c1, d, c1 * c2)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._radicand(other)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return QuadIrr(a1 * a2 + b1 * b2 * d, a1 * b2 + a2 * b1, d, self.c * other.c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * quad_recip(other)

    def __rtruediv__(self, other):
        return quad_recip(self) * other


def _coerce(x):
    if isinstance(x, QuadIrr):
        return x
    if isinstance(x, (int, _RationalABC)):
        return QuadIrr.from_fraction(x)
    return NotImplemented


def as_quad(x) -> QuadIrr:
    """Coerce an int, Fraction or QuadIrr to QuadIrr."""
    q = _coerce(x)
    if q is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an exact real")
    return q


def quad_normalize(a: int, b: int, d: int, c: int) -> QuadIrr:
    """Canonical ``(a + b*sqrt(d)) / c``; rejects ``c == 0`` and ``d < 0``."""
    return QuadIrr(a, b, d, c)


def quad_cmp(x, y) -> int:
    """Exact three-way comparison, returning -1, 0 or 1."""
    x, y = as_quad(x), as_quad(y)
    if x.b == 0 and y.b == 0:
        lhs, rhs = x.a * y.c, y.a * x.c
        return (lhs > rhs) - (lhs < rhs)
    if x.d == y.d or not x.d or not y.d:
        return (x - y).sign()
    # different fields: sign of u - v with u = (a1 c2 + b1 c2 sqrt d1), v = c1 (y.a + y.b sqrt d2)
    u = QuadIrr(x.a * y.c, x.b * y.c, x.d, 1)
    v = QuadIrr(y.a * x.c, y.b * x.c, y.d, 1)
    # move the rational part of v to u, leaving u' - w*sqrt(d2)
    u = u - v.a
    w = v.b
    su, sw = u.sign(), (w > 0) - (w < 0)
    if su != sw:
        return su if su else -sw
    # same sign: compare squares, u'^2 vs w^2 d2
    s = (u * u - w * w * y.d).sign()
    return s * su


def quad_floor(x) -> int:
    """The integer ``n`` with ``n <= x < n + 1``."""
    x = as_quad(x)
    if x.b == 0:
        return x.a // x.c
    # b*sqrt(d) is irrational, so floor(x) = floor((a + floor(b*sqrt(d))) / c)
    r = math.isqrt(x.b * x.b * x.d)
    fb = r if x.b > 0 else -r - 1
    return (x.a + fb) // x.c


def quad_recip(x) -> QuadIrr:
    """``1/x`` rationalized by the conjugate."""
    x = as_quad(x)
    if x.a == 0 and x.b == 0:
        raise ZeroDivisionError("reciprocal of zero")
    a, b, d, c = x.a, x.b, x.d, x.c
    return QuadIrr(c * a, -c * b, d, a * a - b * b * d)


def rational_cf(alpha) -> list[int]:
    """Finite continued fraction of a rational by Euclidean division.

    The last partial quotient is at least 2 unless the list has length 1.
    """
    alpha = Fraction(alpha)
    p, q = alpha.numerator, alpha.denominator
    out = []
    while q:
        n, r = divmod(p, q)
        out.append(n)
        p, q = q, r
    return out


def fold_cf(quotients) -> Fraction:
    """Evaluate ``[n0, n1, ...]`` with the convergent recurrence."""
    p, p1, q, q1 = 1, 0, 0, 1
    for n in quotients:
        p, p1 = n * p + p1, p
        q, q1 = n * q + q1, q
    if q == 0:
        raise ValueError("empty continued fraction")
    return Fraction(p, q)
