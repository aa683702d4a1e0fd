"""Text grammar for numbers and matrices.

Numbers: ``-3``, ``355/113``, ``quad(a,b,d,c)`` for ``(a + b sqrt d) / c``.
Matrices: ``[[a,b],[c,d]]``. Whitespace is ignored everywhere.
"""

from __future__ import annotations

import re

from .exact import QuadIrr
from .gl2 import Pgl

__all__ = ["ParseError", "parse_number", "parse_matrix", "format_number", "format_matrix"]


class ParseError(ValueError):
    """Syntax error at character offset ``pos`` of ``text``."""

    def __init__(self, text: str, pos: int, expected: str):
        self.text, self.pos, self.expected = text, pos, expected
        super().__init__(f"expected {expected} at position {pos} in {text!r}")


_INT = r"[+-]?\d+"


class _Scanner:
    def __init__(self, text: str):
        self.text, self.pos = text, 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def take(self, pattern: str, what: str) -> str:
        self.skip()
        m = re.compile(pattern).match(self.text, self.pos)
        if not m:
            raise ParseError(self.text, self.pos, what)
        self.pos = m.end()
        return m.group(0)

    def integer(self) -> int:
        return int(self.take(_INT, "an integer"))

    def end(self):
        self.skip()
        if self.pos != len(self.text):
            raise ParseError(self.text, self.pos, "end of input")


def parse_number(text: str) -> QuadIrr:
    sc = _Scanner(text)
    sc.skip()
    if text.startswith("quad", sc.pos):
        sc.take(r"quad", "'quad'")
        sc.take(r"\(", "'('")
        args = [sc.integer()]
        for _ in range(3):
            sc.take(",", "','")
            args.append(sc.integer())
        sc.take(r"\)", "')'")
        sc.end()
        a, b, d, c = args
        return QuadIrr(a, b, d, c)
    num = sc.integer()
    den = 1
    sc.skip()
    if sc.pos < len(text) and text[sc.pos] == "/":
        sc.take("/", "'/'")
        den = sc.integer()
    sc.end()
    return QuadIrr(num, 0, 0, den)


def parse_matrix(text: str) -> Pgl:
    sc = _Scanner(text)
    sc.take(r"\[", "'['")
    rows = []
    for k in range(2):
        if k:
            sc.take(",", "','")
        sc.take(r"\[", "'['")
        first = sc.integer()
        sc.take(",", "','")
        rows.append((first, sc.integer()))
        sc.take(r"\]", "']'")
    sc.take(r"\]", "']'")
    sc.end()
    return Pgl.from_rows(rows)


def format_number(x: QuadIrr) -> str:
    return str(x)


def format_matrix(g: Pgl) -> str:
    return str(g)
