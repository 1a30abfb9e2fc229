"""Named knots, generator families and the tau table."""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Mapping, Optional

from .errors import BingBoundError, UnknownAtomError
from .seifert import UNKNOT, SeifertMatrix, torus_knot, twist_knot, validate

log = logging.getLogger(__name__)

_TORUS = re.compile(r"^T\((\d+),(\d+)\)$")
_TWIST = re.compile(r"^twist\((-?\d+)\)$")


@dataclass(frozen=True)
class CatalogEntry:
    matrix: Optional[SeifertMatrix] = None
    g3: Optional[int] = None
    tau: Optional[int] = None


def _torus_entry(p: int, q: int) -> CatalogEntry:
    g = (p - 1) * (q - 1) // 2
    return CatalogEntry(torus_knot(p, q), g3=g, tau=g)


def _builtin_entries() -> dict[str, CatalogEntry]:
    return {
        "unknot": CatalogEntry(UNKNOT, g3=0, tau=0),
        "3_1": _torus_entry(2, 3),
        "4_1": CatalogEntry(validate([[1, 1], [0, -1]]), g3=1),
        "5_1": _torus_entry(2, 5),
        "5_2": CatalogEntry(twist_knot(-2), g3=1),
        "6_1": CatalogEntry(twist_knot(2), g3=1),
        # positive untwisted Whitehead double of the trefoil: tau only
        "D(T(2,3))": CatalogEntry(None, g3=None, tau=1),
    }


SHIPPED_WITH_MATRICES = (
    "unknot", "3_1", "4_1", "5_1", "5_2", "6_1",
    "T(2,3)", "T(2,5)", "T(2,7)", "T(3,4)", "T(3,5)",
    "twist(2)", "twist(-2)", "twist(3)",
)
SHIPPED_TAU_ONLY = ("D(T(2,3))",)


class KnotCatalog:
    """Identifier -> (Seifert matrix, g3, tau), plus the ``T(p,q)`` and
    ``twist(k)`` families resolved on demand."""

    def __init__(self, entries: Optional[Mapping[str, CatalogEntry]] = None):
        self._entries = dict(_builtin_entries() if entries is None else entries)
        for name, e in self._entries.items():
            if e.matrix is not None:
                validate(e.matrix.rows)

    def __contains__(self, name: str) -> bool:
        try:
            self.lookup(name)
        except UnknownAtomError:
            return False
        return True

    def names(self) -> list[str]:
        return list(self._entries)

    def lookup(self, name: str) -> CatalogEntry:
        if name in self._entries:
            return self._entries[name]
        m = _TORUS.match(name)
        if m:
            try:
                return _torus_entry(int(m[1]), int(m[2]))
            except BingBoundError as exc:
                raise UnknownAtomError(f"{name}: {exc}") from exc
        m = _TWIST.match(name)
        if m:
            k = int(m[1])
            return CatalogEntry(twist_knot(k), g3=0 if k == 0 else 1, tau=0 if k == 0 else None)
        raise UnknownAtomError(f"unknown knot {name!r}")

    def updated(self, entries: Mapping[str, CatalogEntry]) -> "KnotCatalog":
        merged = dict(self._entries)
        merged.update(entries)
        return KnotCatalog(merged)

    def with_tau_overrides(self, table: Mapping[str, int]) -> "KnotCatalog":
        merged = dict(self._entries)
        for name, tau in table.items():
            try:
                entry = self.lookup(name)
            except UnknownAtomError:
                entry = CatalogEntry()
            if entry.tau is not None and entry.tau != tau:
                log.warning("tau table overrides shipped value for %s: %d -> %d", name, entry.tau, tau)
            merged[name] = replace(entry, tau=int(tau))
        return KnotCatalog(merged)


DEFAULT_CATALOG = KnotCatalog()


def canonical_name(identifier: str) -> str:
    """Normalise an identifier the way the expression printer writes atoms."""
    from .expression import Atom, parse

    try:
        expr = parse(identifier)
    except BingBoundError:
        return identifier.strip()
    return expr.name if isinstance(expr, Atom) else identifier.strip()


def parse_tau_table(text: str) -> dict[str, int]:
    table = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.rsplit(None, 1)
        if len(parts) != 2:
            raise BingBoundError(f"tau table line {lineno}: expected 'IDENTIFIER INTEGER'")
        try:
            table[canonical_name(parts[0])] = int(parts[1])
        except ValueError:
            raise BingBoundError(f"tau table line {lineno}: {parts[1]!r} is not an integer") from None
    return table


def load_tau_table(path) -> dict[str, int]:
    return parse_tau_table(Path(path).read_text())


def load_catalog(path, base: Optional[KnotCatalog] = None) -> KnotCatalog:
    """Read a JSON catalog ``{"name": {"matrix": [[...]], "g3": 1, "tau": 0}}``
    and layer it over ``base`` (the shipped catalog by default)."""
    data = json.loads(Path(path).read_text())
    entries = {}
    for name, spec in data.items():
        matrix = validate(spec["matrix"]) if spec.get("matrix") is not None else None
        entries[canonical_name(name)] = CatalogEntry(matrix, spec.get("g3"), spec.get("tau"))
    return (base or DEFAULT_CATALOG).updated(entries)
