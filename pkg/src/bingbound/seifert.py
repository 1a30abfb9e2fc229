"""Seifert matrices: validation, standard families and block operations.

Convention: ``V[i][j] = lk(a_i^+, a_j)``.  With this convention the
right-handed trefoil ``torus_knot(2, 3)`` has signature -2, the reverse of a
knot is realised by the transpose and the mirror image by ``-V^T``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import NotCoprimeError, NotUnimodularIntersectionError, OddSizeError, SeifertError

Rows = tuple[tuple[int, ...], ...]


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free Bareiss elimination."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SeifertMatrix:
    """A validated Seifert matrix of a knot; the 0x0 matrix is the unknot."""

    rows: Rows

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def genus_bound(self) -> int:
        return self.size // 2

    def transpose(self) -> "SeifertMatrix":
        return SeifertMatrix(tuple(zip(*self.rows))) if self.rows else self

    def mirror(self) -> "SeifertMatrix":
        return SeifertMatrix(tuple(tuple(-x for x in r) for r in zip(*self.rows))) if self.rows else self

    def symmetrized(self) -> Rows:
        """``V + V^T``."""
        n = self.size
        return tuple(tuple(self.rows[i][j] + self.rows[j][i] for j in range(n)) for i in range(n))

    def antisymmetrized(self) -> Rows:
        """``V - V^T``."""
        n = self.size
        return tuple(tuple(self.rows[i][j] - self.rows[j][i] for j in range(n)) for i in range(n))

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


UNKNOT = SeifertMatrix(())


def _as_rows(entries: Iterable[Iterable[int]]) -> Rows:
    rows = []
    for r in entries:
        row = []
        for x in r:
            if isinstance(x, bool) or int(x) != x:
                raise SeifertError(f"non-integer entry {x!r}")
            row.append(int(x))
        rows.append(tuple(row))
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise SeifertError("Seifert matrix must be square")
    return tuple(rows)


def validate(entries: Iterable[Iterable[int]]) -> SeifertMatrix:
    """Check that ``entries`` is a knot Seifert matrix and wrap it.

    Raises OddSizeError when the size is odd and NotUnimodularIntersectionError
    unless ``det(V - V^T) == 1``.
    """
    rows = _as_rows(entries)
    if len(rows) % 2:
        raise OddSizeError(f"Seifert matrix has odd size {len(rows)}")
    v = SeifertMatrix(rows)
    d = int_det(v.antisymmetrized())
    if d != 1:
        raise NotUnimodularIntersectionError(f"det(V - V^T) = {d}, expected 1")
    return v


def block_sum(*blocks: SeifertMatrix) -> SeifertMatrix:
    """Block-diagonal sum, the Seifert matrix of the connected sum."""
    n = sum(b.size for b in blocks)
    rows: list[tuple[int, ...]] = []
    offset = 0
    for b in blocks:
        left = (0,) * offset
        right = (0,) * (n - offset - b.size)
        rows.extend(left + r + right for r in b.rows)
        offset += b.size
    return SeifertMatrix(tuple(rows))


def _bidiagonal(n: int) -> list[list[int]]:
    return [[1 if j == i else (-1 if j == i + 1 else 0) for j in range(n)] for i in range(n)]


def torus_knot(p: int, q: int) -> SeifertMatrix:
    """Seifert matrix of the positive (p, q) torus knot, size (p-1)(q-1).

    Uses the tensor form ``-(G_{p-1} (x) G_{q-1})`` with ``G_n`` the upper
    bidiagonal matrix with 1 on the diagonal and -1 above it.
    """
    if p < 2 or q < 2:
        raise SeifertError("torus knot parameters must be >= 2")
    if gcd(p, q) != 1:
        raise NotCoprimeError(f"gcd({p}, {q}) != 1")
    a, b = _bidiagonal(p - 1), _bidiagonal(q - 1)
    m, n = p - 1, q - 1
    rows = [[-a[i][k] * b[j][l] for k in range(m) for l in range(n)] for i in range(m) for j in range(n)]
    return validate(rows)


def twist_knot(k: int) -> SeifertMatrix:
    """Twist knot with Seifert matrix ``[[-1, 1], [0, k]]``.

    ``k = -1`` is the right-handed trefoil, ``k = 1`` the figure eight and
    ``k = 0`` the unknot.
    """
    return validate([[-1, 1], [0, k]])


def read_matrix_text(text: str) -> SeifertMatrix:
    """Parse one row per line of whitespace-separated integers."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([int(tok) for tok in line.split()])
    return validate(rows)
