"""The slow (additive) continued fraction.

Each step applies one of ``T``, ``T^-1 eps`` or ``T^-1`` depending on whether
the current value lies in ``(-inf, 0]``, ``(0, 1]`` or ``(1, inf)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .cf_classic import states as classic_states
from .exact import QuadIrr, as_quad, quad_floor, quad_recip
from .gl2 import EPS, IDENTITY, T, T_INV, Pgl, compose

__all__ = [
    "Move",
    "SlowCFState",
    "classify",
    "slow_step",
    "iter_slow",
    "slow_expand",
    "gamma_prime_explicit",
    "slow_prefix_length",
    "steps_through_level",
    "post_prefix_set",
    "compress_slow_to_classic",
    "check_invariants",
]


class Move(enum.Enum):
    ADD_ONE = "ADD_ONE"
    RECIP_MINUS_ONE = "RECIP_MINUS_ONE"
    SUB_ONE = "SUB_ONE"


_MATRIX = {
    Move.ADD_ONE: T,
    Move.RECIP_MINUS_ONE: compose(T_INV, EPS),
    Move.SUB_ONE: T_INV,
}


def classify(x: QuadIrr) -> Move:
    if x <= 0:
        return Move.ADD_ONE
    if x <= 1:
        return Move.RECIP_MINUS_ONE
    return Move.SUB_ONE


@dataclass(frozen=True)
class SlowCFState:
    """Value ``x`` after ``i`` steps, the move it triggers, and the matrix
    ``gamma`` with ``gamma(x_0) == x``."""

    i: int
    x: QuadIrr
    move: Move
    gamma: Pgl


def _apply(move: Move, x: QuadIrr) -> QuadIrr:
    if move is Move.ADD_ONE:
        return x + 1
    if move is Move.SUB_ONE:
        return x - 1
    return quad_recip(x) - 1


def slow_step(state: SlowCFState) -> SlowCFState:
    x = _apply(state.move, state.x)
    return SlowCFState(state.i + 1, x, classify(x), compose(_MATRIX[state.move], state.gamma))


def iter_slow(x) -> Iterator[SlowCFState]:
    x = as_quad(x)
    s = SlowCFState(0, x, classify(x), IDENTITY)
    while True:
        yield s
        s = slow_step(s)


def slow_expand(x, steps: int) -> list[SlowCFState]:
    """States ``0 .. steps-1``."""
    x = as_quad(x)
    if x.is_rational:
        raise ValueError("the slow expansion is only defined here for irrationals")
    out = []
    for s in iter_slow(x):
        if len(out) == steps:
            break
        out.append(s)
    return out


def slow_prefix_length(x) -> int:
    """Number of pure translations before the first reciprocal move, ``|floor(x)|``."""
    return abs(quad_floor(x))


def gamma_prime_explicit(x, i_max: int) -> frozenset[Pgl]:
    """The closed-form set of slow matrices through classic level ``i_max``.

    Level ``i`` contributes ``[[q_{i-2} + k q_{i-1}, -p_{i-2} - k p_{i-1}],
    [-q_{i-1}, p_{i-1}]]`` for ``1 <= k <= n_i``.
    """
    out = set()
    for s in classic_states(x, i_max + 1)[1:]:
        for k in range(1, s.n + 1):
            out.add(Pgl(s.q2 + k * s.q1, -s.p2 - k * s.p1, -s.q1, s.p1))
    return frozenset(out)


def steps_through_level(x, level: int) -> int:
    """Slow steps consumed by the prefix and classic levels ``1 .. level``."""
    ns = [s.n for s in classic_states(x, level + 1)]
    return abs(ns[0]) + sum(ns[1:])


def post_prefix_set(x, level: int) -> frozenset[Pgl]:
    """``{gamma'_i : prefix < i <= S}`` generated by the recursion, with
    ``S`` the step count through classic ``level``."""
    prefix, stop = slow_prefix_length(x), steps_through_level(x, level)
    return frozenset(s.gamma for s in slow_expand(x, stop + 1)[prefix + 1:])


def compress_slow_to_classic(moves) -> list[int]:
    """Run-length decode a slow move list into classic partial quotients.

    Only completed levels are emitted: ``n_0`` once the first reciprocal
    move appears, and each later ``n_i`` once the following one does.
    """
    moves = [Move(m) for m in moves]
    out: list[int] = []
    j = 0
    lead = 0
    while j < len(moves) and moves[j] is not Move.RECIP_MINUS_ONE:
        if moves[j] is not moves[0]:
            raise ValueError(f"mixed translations in the prefix at step {j}")
        lead += 1
        j += 1
    if j == len(moves):
        return out
    out.append(-lead if moves[0] is Move.ADD_ONE else lead)
    run = None
    for k in range(j, len(moves)):
        m = moves[k]
        if m is Move.ADD_ONE:
            raise ValueError(f"ADD_ONE after a reciprocal move at step {k}")
        if m is Move.RECIP_MINUS_ONE:
            if run is not None:
                out.append(run + 1)
            run = 0
        else:
            run += 1
    return out


def check_invariants(x, levels: int) -> list[dict]:
    """Trichotomy, action consistency and the closed-form set through ``levels``."""
    x = as_quad(x)
    fails = []
    stop = steps_through_level(x, levels)
    sts = slow_expand(x, stop + 1)
    for s in sts:
        if classify(s.x) is not s.move:
            fails.append({"check": "slow_trichotomy", "x": str(x), "i": s.i})
        if s.gamma(x) != s.x:
            fails.append({"check": "slow_action", "x": str(x), "i": s.i})
    generated = frozenset(s.gamma for s in sts[slow_prefix_length(x) + 1:])
    explicit = gamma_prime_explicit(x, levels)
    if generated != explicit:
        fails.append({
            "check": "slow_explicit_set",
            "x": str(x),
            "missing": sorted(g.rows() for g in explicit - generated),
            "extra": sorted(g.rows() for g in generated - explicit),
        })
    decoded = compress_slow_to_classic(s.move for s in sts)
    expected = [s.n for s in classic_states(x, len(decoded))]
    if decoded != expected:
        fails.append({"check": "slow_compression", "x": str(x), "decoded": decoded, "expected": expected})
    return fails
