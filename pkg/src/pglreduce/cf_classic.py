"""The classic positive continued fraction, x_{i+1} = 1 / (x_i - floor(x_i)).

Each state carries the remainder, partial quotient, convergent, the
delta linear form and the reducing matrix, all exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exact import QuadIrr, as_quad, quad_floor, quad_recip
from .gl2 import EPS, IDENTITY, Pgl, compose, inverse, matmul, t_power

__all__ = [
    "ClassicCFState",
    "InsufficientDepth",
    "initial_state",
    "cf_step",
    "iter_states",
    "states",
    "cf_expand",
    "convergents",
    "remainders",
    "gamma_seq",
    "delta_seq",
    "is_convergent",
    "lemma1_select",
    "fib_lower_bound",
    "check_invariants",
    "legendre_candidates",
    "farey_brackets",
]


class InsufficientDepth(ValueError):
    """Raised when a truncated expansion cannot decide the question asked."""


@dataclass(frozen=True)
class ClassicCFState:
    """Step ``i`` of the expansion.

    ``p, q`` is the i-th convergent; ``p1, q1`` and ``p2, q2`` are the
    (i-1)-th and (i-2)-th. ``delta`` is delta_i and ``delta1`` is delta_{i-1}.
    ``signed`` is the raw matrix product behind ``gamma`` (determinant
    (-1)**i), kept because the projective class forgets the sign.
    """

    i: int
    x: QuadIrr
    n: int
    p: int
    q: int
    p1: int
    q1: int
    p2: int
    q2: int
    delta: QuadIrr
    delta1: QuadIrr
    gamma: Pgl
    signed: tuple[int, int, int, int]

    @property
    def convergent(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def terminal(self) -> bool:
        return self.x.is_rational and self.x.a % self.x.c == 0


def initial_state(x) -> ClassicCFState:
    x = as_quad(x)
    n = quad_floor(x)
    return ClassicCFState(
        i=0, x=x, n=n, p=n, q=1, p1=1, q1=0, p2=0, q2=1,
        delta=QuadIrr(1), delta1=x, gamma=IDENTITY, signed=(1, 0, 0, 1),
    )


def cf_step(s: ClassicCFState) -> ClassicCFState | None:
    """Advance one step; ``None`` once a rational input is exhausted."""
    if s.terminal:
        return None
    x = quad_recip(s.x - s.n)
    n = quad_floor(x)
    return ClassicCFState(
        i=s.i + 1,
        x=x,
        n=n,
        p=n * s.p + s.p1,
        q=n * s.q + s.q1,
        p1=s.p, q1=s.q, p2=s.p1, q2=s.q1,
        delta=s.delta1 - s.n * s.delta,
        delta1=s.delta,
        gamma=compose(compose(EPS, t_power(-s.n)), s.gamma),
        signed=matmul((0, 1, 1, -s.n), s.signed),
    )


def iter_states(x) -> Iterator[ClassicCFState]:
    s = initial_state(x)
    while s is not None:
        yield s
        s = cf_step(s)


def states(x, depth: int) -> list[ClassicCFState]:
    """States 0 .. depth-1 (fewer for a terminating rational)."""
    out = []
    for s in iter_states(x):
        if len(out) == depth:
            break
        out.append(s)
    return out


def remainders(x, count: int) -> list[QuadIrr]:
    """``[x_0, ..., x_{count-1}]`` without the bookkeeping of full states."""
    x = as_quad(x)
    out = [x]
    while len(out) < count:
        n = quad_floor(x)
        if x.is_rational and x == n:
            break
        x = quad_recip(x - n)
        out.append(x)
    return out


def cf_expand(x, depth: int) -> list[int]:
    return [s.n for s in states(x, depth)]


def convergents(x, depth: int) -> list[Fraction]:
    return [s.convergent for s in states(x, depth)]


def gamma_seq(x, depth: int) -> list[Pgl]:
    """``[gamma_1, ..., gamma_depth]``.

    Built by the left-multiplication recurrence and checked against the
    explicit product of ``[[0, 1], [1, -n_j]]`` factors.
    """
    sts = states(x, depth + 1)
    out = []
    product = (1, 0, 0, 1)
    for prev, s in zip(sts, sts[1:]):
        product = matmul((0, 1, 1, -prev.n), product)
        assert Pgl(*product) == s.gamma, (s.i, product, s.gamma)
        out.append(s.gamma)
    return out


def delta_seq(x, depth: int) -> list[QuadIrr]:
    """``[delta_{-1}, delta_0, ..., delta_depth]``, checked against the closed form."""
    x = as_quad(x)
    sts = states(x, depth + 1)
    out = [x]
    for s in sts:
        closed = (-1) ** s.i * (s.p1 - s.q1 * x)
        assert s.delta == closed, (s.i, s.delta, closed)
        out.append(s.delta)
    return out


def is_convergent(pq, x, depth: int | None = None) -> bool:
    """Whether ``pq`` is one of the convergents of ``x``.

    Convergent denominators increase strictly from index 1, so the expansion
    only needs to run until ``q`` exceeds the denominator of ``pq``. With an
    explicit ``depth`` that fails to get there, raises :class:`InsufficientDepth`.
    """
    pq = Fraction(pq)
    for s in iter_states(x):
        if depth is not None and s.i >= depth:
            raise InsufficientDepth(f"q_{depth - 1} does not exceed {pq.denominator}")
        if s.p == pq.numerator and s.q == pq.denominator:
            return True
        if s.q > pq.denominator:
            return False
    return False


def lemma1_select(rt, su, x) -> list[Fraction]:
    """Which of the Farey neighbours ``rt <= x <= su`` are convergents of ``x``."""
    rt, su, x = Fraction(rt), Fraction(su), as_quad(x)
    r, t, s, u = rt.numerator, rt.denominator, su.numerator, su.denominator
    if abs(r * u - s * t) != 1:
        raise ValueError(f"{rt} and {su} are not Farey neighbours")
    if not rt <= x <= su:
        raise ValueError(f"{x} is not between {rt} and {su}")
    out = [f for f in (rt, su) if is_convergent(f, x)]
    if not out:
        raise AssertionError(f"neither {rt} nor {su} is a convergent of {x}")
    return out


def fib_lower_bound(i: int) -> QuadIrr:
    """``phi**i / sqrt(5)`` exactly, with ``phi**i = (L_i + F_i sqrt 5) / 2``."""
    f, f1, l, l1 = 0, 1, 2, -1  # F_0, F_{-1}, L_0, L_{-1}
    for _ in range(i):
        f, f1 = f + f1, f
        l, l1 = l + l1, l
    return QuadIrr(5 * f, l, 5, 10)


def check_invariants(x, depth: int) -> list[dict]:
    """Check every per-step identity and inequality of the expansion.

    Returns a list of failure records; empty means everything held. Each
    check name appears in the record so callers can filter.
    """
    x = as_quad(x)
    fails = []

    def fail(check, i, **info):
        fails.append({"check": check, "x": str(x), "i": i, **info})

    sts = states(x, depth + 1)
    for s in sts:
        i = s.i
        # successive convergents: p_{i+1} q_i - p_i q_{i+1} = (-1)^i, phrased at i-1
        if i >= 1 and s.p * s.q1 - s.p1 * s.q != (-1) ** (i - 1):
            fail("det_identity", i - 1)
        if not s.q >= s.q1 >= 0 or (i >= 2 and not s.q > s.q1 > 0):
            fail("ineq1_q_monotone", i, q=s.q, q_prev=s.q1)
        if (i >= 2 and abs(s.p) < abs(s.p1)) or (i >= 3 and abs(s.p) <= abs(s.p1)):
            fail("ineq2_p_monotone", i, p=s.p, p_prev=s.p1)
        bound = fib_lower_bound(i)
        if s.q < bound:
            fail("ineq3_q_fibonacci", i, q=s.q)
        if abs(s.p) < bound:
            fail("ineq4_p_fibonacci", i, p=s.p)
        if s.delta != (-1) ** i * (s.p1 - s.q1 * x):
            fail("delta_closed_form", i)
        if not x.is_rational:
            if not s.delta > 0 or (i >= 1 and not s.delta < s.delta1):
                fail("delta_decreasing", i, delta=str(s.delta))
        # gamma_i^{-1} = [[p_{i-1}, p_{i-2}], [q_{i-1}, q_{i-2}]]
        if inverse(s.gamma) != Pgl(s.p1, s.p2, s.q1, s.q2):
            fail("gamma_inverse_convergents", i, gamma=s.gamma.rows())
        a, b, c, d = s.signed
        if a * d - b * c != (-1) ** i:
            fail("gamma_signed_det", i)
        if (a * x + b, c * x + d) != (s.delta1, s.delta):
            fail("gamma_maps_to_deltas", i)
    if not x.is_rational:
        for s, s2 in zip(sts, sts[2:]):
            if not 2 * s2.delta < s.delta:
                fail("delta_halving", s2.i)
    return fails



def legendre_candidates(x, max_q: int):
    """Rationals ``p/q`` with ``q <= max_q`` and ``|p/q - x| < 1/(2 q^2)``."""
    x = as_quad(x)
    for q in range(1, max_q + 1):
        base = quad_floor(q * x)
        for p in (base, base + 1):
            err = p - q * x
            if (err if err >= 0 else -err) * (2 * q) < 1:
                yield Fraction(p, q)


def farey_brackets(x, max_den: int):
    """Farey neighbours ``r/t <= x <= s/u`` with ``t, u <= max_den``.

    For fixed ``t`` and ``u`` there is at most one such pair, with
    ``r = floor(t x)`` and ``s = (r u + 1) / t``.
    """
    x = as_quad(x)
    for t in range(1, max_den + 1):
        r = quad_floor(t * x)
        for u in range(1, max_den + 1):
            s, rem = divmod(r * u + 1, t)
            if rem == 0 and Fraction(s, u) >= x:
                yield Fraction(r, t), Fraction(s, u)
