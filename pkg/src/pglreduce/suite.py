"""Batch verification over a corpus, configured by a small key-value file.

Config format, one ``key = value`` per line, ``#`` starts a comment::

    corpus = quad(0,1,2,1)
    corpus = quad(1,1,5,2)
    height_bound = 25
    depth = 30
    slow_steps = 200
    gamma_height = 10
    output = -

``corpus`` may repeat; every other key appears at most once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from . import cf_classic, cf_slow, hurwitz, membership
from .exact import QuadIrr
from .gl2 import enumerate_by_height
from .textio import parse_number

__all__ = ["ConfigError", "RunConfig", "run_verification_suite", "DEFAULT_CONFIG"]

DEFAULT_CONFIG = Path(__file__).with_name("default.cfg")

_INT_KEYS = ("height_bound", "depth", "slow_steps", "gamma_height")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    corpus: list[QuadIrr] = field(default_factory=list)
    height_bound: int = 25
    depth: int = 30
    slow_steps: int = 200
    gamma_height: int = 10
    output: str = "-"
    legendre_max_q: int = 50
    farey_max_den: int = 30
    slow_levels: int = 8

    def validate(self):
        if not self.corpus:
            raise ConfigError("corpus is empty")
        for key in _INT_KEYS + ("legendre_max_q", "farey_max_den", "slow_levels"):
            if getattr(self, key) <= 0:
                raise ConfigError(f"{key} must be positive")
        for x in self.corpus:
            if x.is_rational:
                raise ConfigError(f"corpus entry {x} is rational")
        return self

    @classmethod
    def loads(cls, text: str) -> RunConfig:
        cfg = cls()
        seen = set()
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = (s.strip() for s in line.partition("="))
            if not sep:
                raise ConfigError(f"line {lineno}: expected 'key = value'")
            if key == "corpus":
                try:
                    cfg.corpus.append(parse_number(value))
                except ValueError as e:
                    raise ConfigError(f"line {lineno}: {e}") from e
                continue
            if key in seen:
                raise ConfigError(f"line {lineno}: duplicate key {key!r}")
            seen.add(key)
            if key == "output":
                cfg.output = value
            elif hasattr(cfg, key) and key != "corpus":
                try:
                    setattr(cfg, key, int(value))
                except ValueError as e:
                    raise ConfigError(f"line {lineno}: {key} needs an integer") from e
            else:
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
        return cfg.validate()

    @classmethod
    def load(cls, path) -> RunConfig:
        return cls.loads(Path(path).read_text())

    def dumps(self) -> str:
        lines = [f"corpus = {x}" for x in self.corpus]
        for key in _INT_KEYS + ("legendre_max_q", "farey_max_den", "slow_levels"):
            lines.append(f"{key} = {getattr(self, key)}")
        lines.append(f"output = {self.output}")
        return "\n".join(lines) + "\n"


def _record(check, key, ok, **detail):
    return {"check": check, "input": key, "pass": bool(ok), **detail}


def _classic(cfg, x):
    fails = cf_classic.check_invariants(x, cfg.depth)
    return [_record("classic_invariants", str(x), not fails, failures=fails)]


def _legendre(cfg, x):
    bad = [str(f) for f in cf_classic.legendre_candidates(x, cfg.legendre_max_q)
           if not cf_classic.is_convergent(f, x)]
    return [_record("legendre", str(x), not bad, counterexamples=bad)]


def _lemma1(cfg, x):
    bad = []
    for rt, su in cf_classic.farey_brackets(x, cfg.farey_max_den):
        try:
            cf_classic.lemma1_select(rt, su, x)
        except AssertionError:
            bad.append([str(rt), str(su)])
    return [_record("lemma1", str(x), not bad, counterexamples=bad)]


def _theorem1(cfg, x):
    rep = membership.verify_theorem1(x, cfg.height_bound, max(cfg.depth, membership.min_classic_depth(x, cfg.height_bound)))
    return [_record("theorem1", str(x), rep.clean, report=rep.to_json())]


def _theorem2(cfg, x):
    steps = max(cfg.slow_steps, membership.min_slow_steps(x, cfg.height_bound))
    rep = membership.verify_theorem2(x, cfg.height_bound, steps)
    return [_record("theorem2", str(x), rep.clean, report=rep.to_json())]


def _slow(cfg, x):
    fails = cf_slow.check_invariants(x, cfg.slow_levels)
    moves = [s.move for s in cf_slow.slow_expand(x, cfg.slow_steps)]
    decoded = cf_slow.compress_slow_to_classic(moves)
    if decoded != cf_classic.cf_expand(x, len(decoded)):
        fails.append({"check": "slow_compression_long", "decoded": decoded})
    return [_record("slow_invariants", str(x), not fails, failures=fails)]


def _theorem4(cfg, x):
    out = []
    worst = 0
    for g in enumerate_by_height(cfg.gamma_height):
        try:
            res = hurwitz.sync_indices(g, x)
        except hurwitz.NotSynchronized as e:
            out.append(_record("theorem4", f"{x} {g}", False, error=str(e)))
            continue
        if not res.within_bound:
            out.append(_record("theorem4", f"{x} {g}", False, result=res.to_json()))
        worst = max(worst, res.s, res.t)
    if not out:
        out.append(_record("theorem4", str(x), True, gamma_height=cfg.gamma_height, max_index=worst))
    return out


CHECKS = (_classic, _legendre, _lemma1, _theorem1, _theorem2, _slow, _theorem4)


def run_verification_suite(cfg: RunConfig) -> tuple[int, list[dict]]:
    """Run every check over the corpus; exit status 0 iff all records pass."""
    cfg.validate()
    records = []
    for check in CHECKS:
        for x in cfg.corpus:
            records.extend(check(cfg, x))
    records.sort(key=lambda r: (r["check"], r["input"]))
    return (0 if all(r["pass"] for r in records) else 1), records
