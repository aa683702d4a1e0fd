"""Synchronization of the continued fractions of ``x`` and ``g(x)``.

For ``g`` in PGL(2, Z) the expansions of ``x`` and ``g(x)`` agree from
indices ``s`` and ``t`` on, and both indices are bounded by a quantity
``N(g)`` that depends only on ``g``: 3 when ``g`` fixes infinity, otherwise
the larger of ``M(g(inf))`` and ``M(g^-1(inf))`` where

    M(A/B) = log(sqrt(5) * min(|A|, B)) / log(golden ratio) + 2 r + 3

and ``r`` is the length of the continued fraction of ``A/B``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_CEILING, Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

from .cf_classic import remainders, states
from .exact import INF, QuadIrr, as_quad, rational_cf
from .gl2 import Pgl, act, act_proj, compose, inverse

__all__ = [
    "SyncBound",
    "SyncResult",
    "NotSynchronized",
    "m_of",
    "n_of",
    "sync_indices",
    "verify_theorem4",
    "equiv_witness",
]

# grid on which M and N are rounded up
RESOLUTION = 10**6


class NotSynchronized(AssertionError):
    """No pair of equal remainders was found within the cap.

    With the cap at or above ``N(g)`` this contradicts the bound.
    """


@dataclass(frozen=True)
class SyncBound:
    gamma: Pgl
    gamma_inf: object  # Fraction or INF
    gamma_inv_inf: object
    m_forward: Fraction | None  # M(gamma(inf))
    m_backward: Fraction | None  # M(gamma^-1(inf))
    n_value: Fraction
    clamped: bool = False

    @property
    def n_floor(self) -> int:
        return math.floor(self.n_value)

    def to_json(self) -> dict:
        def num(v):
            return None if v is None else {"exact": str(v), "approx": float(v)}

        return {
            "gamma": self.gamma.rows(),
            "gamma_inf": str(self.gamma_inf),
            "gamma_inv_inf": str(self.gamma_inv_inf),
            "m_forward": num(self.m_forward),
            "m_backward": num(self.m_backward),
            "n_value": num(self.n_value),
            "n_floor": self.n_floor,
            "log_term_clamped": self.clamped,
        }


@dataclass(frozen=True)
class SyncResult:
    s: int
    t: int
    common_remainder: QuadIrr
    bound: SyncBound

    @property
    def within_bound(self) -> bool:
        return self.s <= self.bound.n_floor and self.t <= self.bound.n_floor

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "common_remainder": str(self.common_remainder),
            "within_bound": self.within_bound,
            "bound": self.bound.to_json(),
        }


def _log_ratio_upper(m: int) -> Fraction:
    """Upper bound on ``log(sqrt(5) m) / log(phi)`` on the ``RESOLUTION`` grid."""
    with localcontext() as ctx:
        ctx.prec = 60
        five = Decimal(5)
        phi = (1 + five.sqrt()) / 2
        value = (five.sqrt() * m).ln() / phi.ln()
        # 60-digit evaluation error is far below the 1e-40 margin
        scaled = ((value + Decimal("1e-40")) * RESOLUTION).to_integral_value(rounding=ROUND_CEILING)
    return Fraction(int(scaled), RESOLUTION)


@lru_cache(maxsize=4096)
def _m_cached(alpha: Fraction) -> tuple[Fraction, bool]:
    m = min(abs(alpha.numerator), alpha.denominator)
    r = len(rational_cf(alpha))
    if m == 0:
        return Fraction(2 * r + 3), True
    return _log_ratio_upper(m) + 2 * r + 3, False


def m_of(alpha) -> Fraction:
    """Certified rational upper bound on ``M(alpha)``, within ``1e-6``.

    At ``alpha == 0`` the logarithm is undefined; the log term is taken as 0.
    """
    return _m_cached(Fraction(alpha))[0]


@lru_cache(maxsize=65536)
def n_of(g: Pgl) -> SyncBound:
    fwd, back = act_proj(g, INF), act_proj(inverse(g), INF)
    if fwd is INF:
        return SyncBound(g, fwd, back, None, None, Fraction(3))
    (mf, cf), (mb, cb) = _m_cached(fwd), _m_cached(back)
    return SyncBound(g, fwd, back, mf, mb, max(mf, mb), clamped=cf or cb)


def _first_match(xs, ys):
    """Pair ``(s, t)`` with ``xs[s] == ys[t]``, minimizing ``s + t`` then ``s``."""
    where = {}
    for t, y in enumerate(ys):
        where.setdefault(y, t)
    best = None
    for s, x in enumerate(xs):
        t = where.get(x)
        if t is not None and (best is None or s + t < best[0] + best[1]):
            best = (s, t)
    return best


def sync_indices(g: Pgl, x, cap: int | None = None) -> SyncResult:
    """Smallest synchronization indices within ``cap`` (default ``floor(N(g))``).

    Equal remainders ``x_s == y_t`` force equal tails from there on, since
    each step depends on the current remainder alone.
    """
    x = as_quad(x)
    if x.is_rational:
        raise ValueError("synchronization is defined for irrational x")
    bound = n_of(g)
    if cap is None:
        cap = bound.n_floor
    xs = remainders(x, cap + 1)
    ys = remainders(act(g, x), cap + 1)
    hit = _first_match(xs, ys)
    if hit is None:
        raise NotSynchronized(f"no equal remainders for x={x}, gamma={g} within {cap} steps")
    s, t = hit
    return SyncResult(s, t, xs[s], bound)


def verify_theorem4(g: Pgl, x) -> bool:
    """Whether synchronization happens within ``floor(N(g))`` steps.

    Raises :class:`NotSynchronized` when it does not, as evidence against
    the bound.
    """
    return sync_indices(g, x).within_bound


def equiv_witness(x, y, depth: int) -> Pgl | None:
    """A matrix ``g`` with ``g(x) == y`` found from a common remainder.

    Searches ``s, t <= depth``. ``None`` only means nothing was found at this
    depth, not that ``x`` and ``y`` are inequivalent.
    """
    x, y = as_quad(x), as_quad(y)
    sx, sy = states(x, depth + 1), states(y, depth + 1)
    hit = _first_match([s.x for s in sx], [s.x for s in sy])
    if hit is None:
        return None
    s, t = hit
    g = compose(inverse(sy[t].gamma), sx[s].gamma)
    assert act(g, x) == y
    return g

