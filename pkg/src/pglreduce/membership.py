"""Inequality-defined subsets of PGL(2, Z) attached to an irrational ``x``.

``W``   : ``-1 <= g(inf) <= 0`` and ``g(x) > 1``
``W1``  : elements of ``W`` with ``g(inf) == 0`` and ``det g == 1``
``W2``  : elements of ``W`` with ``g(inf) == -1`` and ``det g == -1``
``Wp``  : ``g(inf) <= -1`` and ``g(x) > 0``
``Wp1`` : elements of ``Wp`` with ``g(inf) == -1`` and ``det g == 1``

The classic reduction matrices are exactly ``W - (W1 | W2)`` and the
post-prefix slow matrices exactly ``Wp - Wp1``; the verifiers check this by
scanning every matrix of bounded height.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cf_classic import InsufficientDepth, iter_states, states
from .cf_slow import slow_expand, slow_prefix_length, steps_through_level
from .exact import QuadIrr, as_quad, quad_floor
from .gl2 import Pgl, act, enumerate_by_height

__all__ = [
    "MembershipReport",
    "in_W",
    "in_W1",
    "in_W2",
    "in_Wp",
    "in_Wp1",
    "w1_element",
    "w2_element",
    "wp1_element",
    "verify_theorem1",
    "verify_theorem2",
    "min_classic_depth",
    "min_slow_steps",
]


def _require_irrational(x) -> QuadIrr:
    x = as_quad(x)
    if x.is_rational:
        raise ValueError(f"{x} is rational; the membership sets are defined for irrationals")
    return x


# On canonical matrices c >= 0, so g(inf) = a/c is finite iff c > 0 and the
# interval tests reduce to integer comparisons against c.

def in_W(g: Pgl, x) -> bool:
    x = _require_irrational(x)
    return g.c > 0 and -g.c <= g.a <= 0 and act(g, x) > 1


def in_W1(g: Pgl, x) -> bool:
    return g.a == 0 and g.det == 1 and in_W(g, x)


def in_W2(g: Pgl, x) -> bool:
    return g.a == -g.c and g.det == -1 and in_W(g, x)


def in_Wp(g: Pgl, x) -> bool:
    x = _require_irrational(x)
    return g.c > 0 and g.a <= -g.c and act(g, x) > 0


def in_Wp1(g: Pgl, x) -> bool:
    return g.a == -g.c and g.det == 1 and in_Wp(g, x)


def w1_element(x) -> Pgl:
    n0 = quad_floor(_require_irrational(x))
    return Pgl(0, -1, 1, -1 - n0)


def w2_element(x) -> Pgl | None:
    """The single element of ``W2``, or ``None`` when ``n_1 == 1``."""
    x = _require_irrational(x)
    s0, s1 = states(x, 2)
    if s1.n == 1:
        return None
    return Pgl(-1, 1 + s0.n, 1, -s0.n)


def wp1_element(x) -> Pgl:
    n0 = quad_floor(_require_irrational(x))
    return Pgl(1, -n0, -1, n0 + 1)


@dataclass
class MembershipReport:
    """Outcome of comparing a generated matrix set with an inequality-defined
    set, both restricted to the box of matrices of height ``<= height_bound``."""

    theorem: str
    x: QuadIrr
    height_bound: int
    depth: int
    matched: int = 0
    missing_from_gamma_set: list[Pgl] = field(default_factory=list)
    extra_in_gamma_set: list[Pgl] = field(default_factory=list)
    exceptional_w1: list[Pgl] = field(default_factory=list)
    exceptional_w2: list[Pgl] = field(default_factory=list)
    expected_w1: list[Pgl] = field(default_factory=list)
    expected_w2: list[Pgl] = field(default_factory=list)
    prefix: int = 0

    @property
    def clean(self) -> bool:
        return (
            not self.missing_from_gamma_set
            and not self.extra_in_gamma_set
            and self.exceptional_w1 == self.expected_w1
            and self.exceptional_w2 == self.expected_w2
        )

    def to_json(self) -> dict:
        def rows(gs):
            return [g.rows() for g in gs]

        return {
            "theorem": self.theorem,
            "x": str(self.x),
            "height_bound": self.height_bound,
            "depth": self.depth,
            "prefix": self.prefix,
            "matched": self.matched,
            "missing_from_gamma_set": rows(self.missing_from_gamma_set),
            "extra_in_gamma_set": rows(self.extra_in_gamma_set),
            "exceptional_w1": rows(self.exceptional_w1),
            "exceptional_w2": rows(self.exceptional_w2),
            "expected_w1": rows(self.expected_w1),
            "expected_w2": rows(self.expected_w2),
            "clean": self.clean,
        }


def _expected(element, pred, x, height):
    # the closed-form element must satisfy its own defining predicate;
    # if it does not, expect nothing so the box scan exposes the mismatch
    if element is None or element.height > height or not pred(element, x):
        return []
    return [element]


def min_classic_depth(x, height: int) -> int:
    """Smallest ``depth`` with ``q_{depth-1} > height``."""
    for s in iter_states(x):
        if s.q > height:
            return s.i + 1
    raise InsufficientDepth("expansion terminated before q exceeded the height")


def min_slow_steps(x, height: int) -> int:
    """Slow steps needed so that every post-prefix matrix of height
    ``<= height`` has been generated."""
    return steps_through_level(x, min_classic_depth(x, height))


def verify_theorem1(x, height: int, depth: int | None = None) -> MembershipReport:
    """Compare ``{gamma_i : i >= 1}`` with ``W - (W1 | W2)`` inside the height box."""
    x = _require_irrational(x)
    needed = min_classic_depth(x, height)
    if depth is None:
        depth = needed
    elif depth < needed:
        raise InsufficientDepth(f"depth {depth} < {needed}: q_{depth - 1} does not exceed {height}")
    generated = {s.gamma for s in states(x, depth + 1)[1:] if s.gamma.height <= height}

    rep = MembershipReport("theorem1", x, height, depth)
    target = set()
    for g in enumerate_by_height(height):
        if not in_W(g, x):
            continue
        if in_W1(g, x):
            rep.exceptional_w1.append(g)
        elif in_W2(g, x):
            rep.exceptional_w2.append(g)
        else:
            target.add(g)
    rep.matched = len(target & generated)
    rep.missing_from_gamma_set = sorted(target - generated, key=Pgl.__str__)
    rep.extra_in_gamma_set = sorted(generated - target, key=Pgl.__str__)
    rep.expected_w1 = _expected(w1_element(x), in_W1, x, height)
    rep.expected_w2 = _expected(w2_element(x), in_W2, x, height)
    return rep


def verify_theorem2(x, height: int, steps: int | None = None) -> MembershipReport:
    """Compare the post-prefix slow matrices with ``Wp - Wp1`` inside the box."""
    x = _require_irrational(x)
    needed = min_slow_steps(x, height)
    if steps is None:
        steps = needed
    elif steps < needed:
        raise InsufficientDepth(f"{steps} slow steps < {needed} needed for height {height}")
    prefix = slow_prefix_length(x)
    generated = {s.gamma for s in slow_expand(x, steps + 1)[prefix + 1:] if s.gamma.height <= height}

    rep = MembershipReport("theorem2", x, height, steps, prefix=prefix)
    target = set()
    for g in enumerate_by_height(height):
        if not in_Wp(g, x):
            continue
        if in_Wp1(g, x):
            rep.exceptional_w1.append(g)
        else:
            target.add(g)
    rep.matched = len(target & generated)
    rep.missing_from_gamma_set = sorted(target - generated, key=Pgl.__str__)
    rep.extra_in_gamma_set = sorted(generated - target, key=Pgl.__str__)
    rep.expected_w1 = _expected(wp1_element(x), in_Wp1, x, height)
    return rep
