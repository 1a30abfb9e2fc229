"""Symbolic knot expressions, their evaluation to Seifert matrices, and the
text grammar::

    expr  := term ('#' term)*
    term  := INT '*' term | prim
    prim  := unknot | NAME | T(p,q) | twist(k) | D(expr) | rev(expr)
           | mirror(expr) | <file:PATH> | [[a,b,...],...] | '(' expr ')'
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .errors import NoMatrixForAtomError, ParseError
from .seifert import SeifertMatrix, block_sum, read_matrix_text, validate


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class RawMatrix:
    matrix: SeifertMatrix
    source: Optional[str] = None


@dataclass(frozen=True)
class Sum:
    left: "KnotExpression"
    right: "KnotExpression"


@dataclass(frozen=True)
class Reverse:
    inner: "KnotExpression"


@dataclass(frozen=True)
class Mirror:
    inner: "KnotExpression"


@dataclass(frozen=True)
class Multiple:
    count: int
    inner: "KnotExpression"

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("Multiple count must be a positive integer")


KnotExpression = Union[Atom, RawMatrix, Sum, Reverse, Mirror, Multiple]

UNKNOT_EXPR = Atom("unknot")


def connected_sum(*terms: KnotExpression) -> KnotExpression:
    expr = terms[0]
    for t in terms[1:]:
        expr = Sum(expr, t)
    return expr


def atoms(expr: KnotExpression) -> list[str]:
    if isinstance(expr, Atom):
        return [expr.name]
    if isinstance(expr, RawMatrix):
        return []
    if isinstance(expr, Sum):
        return atoms(expr.left) + atoms(expr.right)
    return atoms(expr.inner)


# -- evaluation ---------------------------------------------------------------


def _catalog(catalog):
    if catalog is None:
        from .catalog import DEFAULT_CATALOG

        return DEFAULT_CATALOG
    return catalog


def atom_matrix(name: str, catalog=None) -> SeifertMatrix:
    entry = _catalog(catalog).lookup(name)
    if entry.matrix is None:
        raise NoMatrixForAtomError(f"{name} has no Seifert matrix in the catalog")
    return entry.matrix


def blocks(expr: KnotExpression, catalog=None) -> list[tuple[SeifertMatrix, int]]:
    """Diagonal blocks of ``evaluate(expr)`` in order, as (block, repeat) runs.

    Reverse and mirror are pushed down to the atoms, so every block is the
    (possibly transposed or mirrored) matrix of one catalog atom or raw matrix.
    """
    catalog = _catalog(catalog)

    def walk(e, rev: bool, mir: bool) -> list[tuple[SeifertMatrix, int]]:
        if isinstance(e, (Atom, RawMatrix)):
            m = e.matrix if isinstance(e, RawMatrix) else atom_matrix(e.name, catalog)
            if mir:
                m = m.mirror()
            if rev:
                m = m.transpose()
            return [(m, 1)] if m.size else []
        if isinstance(e, Sum):
            return walk(e.left, rev, mir) + walk(e.right, rev, mir)
        if isinstance(e, Reverse):
            return walk(e.inner, not rev, mir)
        if isinstance(e, Mirror):
            return walk(e.inner, rev, not mir)
        if isinstance(e, Multiple):
            inner = walk(e.inner, rev, mir)
            if len(inner) == 1:
                return [(inner[0][0], inner[0][1] * e.count)]
            return inner * e.count
        raise TypeError(f"not a knot expression: {e!r}")

    runs: list[tuple[SeifertMatrix, int]] = []
    for m, k in walk(expr, False, False):
        if runs and runs[-1][0] == m:
            runs[-1] = (m, runs[-1][1] + k)
        else:
            runs.append((m, k))
    return runs


def block_counts(expr: KnotExpression, catalog=None) -> Counter:
    c: Counter = Counter()
    for m, k in blocks(expr, catalog):
        c[m] += k
    return c


def evaluate(expr: KnotExpression, catalog=None) -> SeifertMatrix:
    """Seifert matrix of ``expr``: block sums for ``#``, transpose for rev,
    ``-V^T`` for mirror."""
    parts = []
    for m, k in blocks(expr, catalog):
        parts.extend([m] * k)
    return block_sum(*parts)


# -- printing -----------------------------------------------------------------


def to_text(expr: KnotExpression) -> str:
    if isinstance(expr, Atom):
        return expr.name
    if isinstance(expr, RawMatrix):
        if expr.source is not None:
            return f"<file:{expr.source}>"
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in expr.matrix.rows) + "]"
    if isinstance(expr, Sum):
        right = to_text(expr.right)
        if isinstance(expr.right, Sum):
            right = f"({right})"
        return f"{to_text(expr.left)} # {right}"
    if isinstance(expr, Reverse):
        return f"rev({to_text(expr.inner)})"
    if isinstance(expr, Mirror):
        return f"mirror({to_text(expr.inner)})"
    if isinstance(expr, Multiple):
        inner = to_text(expr.inner)
        if isinstance(expr.inner, Sum):
            inner = f"({inner})"
        return f"{expr.count}*{inner}"
    raise TypeError(f"not a knot expression: {expr!r}")


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<file><file:[^>]*>)|(?P<int>-?\d+(?![A-Za-z_\d]))|(?P<name>[A-Za-z0-9_]+)|(?P<sym>[#*(),\[\]]))"
)


class _Parser:
    def __init__(self, text: str, base_dir: Optional[Path]):
        self.text = text
        self.base_dir = base_dir
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            while text[pos].isspace():
                pos += 1
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
            kind = m.lastgroup
            self.tokens.append((kind, m[kind], m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("eof", "", len(self.text))

    def take(self, value: Optional[str] = None, kind: Optional[str] = None):
        tok = self.peek()
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = value if value is not None else kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self) -> KnotExpression:
        if not self.tokens:
            raise ParseError("empty expression", self.text, 0)
        e = self.expr()
        tok = self.peek()
        if tok[0] != "eof":
            raise ParseError(f"unexpected {tok[1]!r}", self.text, tok[2])
        return e

    def expr(self) -> KnotExpression:
        e = self.term()
        while self.peek()[1] == "#":
            self.take("#")
            e = Sum(e, self.term())
        return e

    def term(self) -> KnotExpression:
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            n = int(value)
            if n < 1:
                raise ParseError("multiplier must be a positive integer", self.text, pos)
            self.take("*")
            return Multiple(n, self.term())
        return self.prim()

    def _int(self) -> int:
        return int(self.take(kind="int")[1])

    def prim(self) -> KnotExpression:
        kind, value, pos = self.peek()
        if value == "(":
            self.take("(")
            e = self.expr()
            self.take(")")
            return e
        if value == "[":
            return self.inline_matrix()
        if kind == "file":
            self.take()
            path = value[len("<file:"):-1]
            full = Path(path) if self.base_dir is None else self.base_dir / path
            # I/O failures propagate as OSError, not ParseError
            text = full.read_text()
            return RawMatrix(read_matrix_text(text), source=path)
        if kind != "name":
            raise ParseError(f"expected a knot, got {value or 'end of input'!r}", self.text, pos)
        self.take()
        if self.peek()[1] != "(":
            return Atom(value)
        if value in ("rev", "mirror", "D"):
            self.take("(")
            inner = self.expr()
            self.take(")")
            if value == "rev":
                return Reverse(inner)
            if value == "mirror":
                return Mirror(inner)
            return Atom(f"D({to_text(inner)})")
        if value == "T":
            self.take("(")
            p = self._int()
            self.take(",")
            q = self._int()
            self.take(")")
            return Atom(f"T({p},{q})")
        if value == "twist":
            self.take("(")
            k = self._int()
            self.take(")")
            return Atom(f"twist({k})")
        raise ParseError(f"unknown constructor {value!r}", self.text, pos)

    def inline_matrix(self) -> KnotExpression:
        _, _, pos = self.take("[")
        rows = []
        while self.peek()[1] == "[":
            self.take("[")
            row = []
            if self.peek()[1] != "]":
                row.append(self._int())
                while self.peek()[1] == ",":
                    self.take(",")
                    row.append(self._int())
            self.take("]")
            rows.append(row)
            if self.peek()[1] == ",":
                self.take(",")
        self.take("]")
        try:
            return RawMatrix(validate(rows))
        except Exception as exc:
            raise ParseError(f"invalid matrix literal: {exc}", self.text, pos) from exc


def parse(text: str, base_dir=None) -> KnotExpression:
    """Parse the knot-expression grammar; raises ParseError with a position."""
    return _Parser(text, Path(base_dir) if base_dir is not None else None).parse()
