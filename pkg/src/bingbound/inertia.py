"""Inertia of Levine-Tristram forms ``H(w) = (1 - w) V + (1 - conj w) V^T``.

Two routes:

* exact: symmetric elimination with congruence pivoting over one of the
  fields in :mod:`bingbound.fields`;
* floating: ``numpy.linalg.eigvalsh`` with zero threshold ``2^-30 * ||H||_inf``,
  falling back to the exact route on the dyadic value of ``w`` whenever an
  eigenvalue lands within four thresholds of zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .fields import GaussianRationalField, RationalField, UnitCircleField, cyclotomic_field
from .seifert import SeifertMatrix

ZERO_THRESHOLD = 2.0**-30
ESCALATION_FACTOR = 4.0
EXACT_ORDER_LIMIT = 120


class Inertia(NamedTuple):
    positive: int
    negative: int
    zero: int

    @property
    def signature(self) -> int:
        return self.positive - self.negative

    def __add__(self, other):  # type: ignore[override]
        return Inertia(self.positive + other.positive, self.negative + other.negative, self.zero + other.zero)

    def times(self, n: int) -> "Inertia":
        return Inertia(n * self.positive, n * self.negative, n * self.zero)

    def negated(self) -> "Inertia":
        return Inertia(self.negative, self.positive, self.zero)


def hermitian_inertia(h: Sequence[Sequence], field) -> Inertia:
    """Inertia of the Hermitian matrix ``h`` with entries in ``field``.

    Eliminates one diagonal pivot at a time; when every remaining diagonal
    entry vanishes, the congruence ``col_i += c col_j, row_i += conj(c) row_j``
    with ``c = conj(h_ij)`` plants ``2 |h_ij|^2`` on the diagonal.
    """
    a = [list(r) for r in h]
    live = list(range(len(a)))
    pos = neg = 0
    is_zero, mul, sub, conj = field.is_zero, field.mul, field.sub, field.conj
    while live:
        piv = next((i for i in live if not is_zero(a[i][i])), None)
        if piv is None:
            pair = next(((i, j) for i in live for j in live if i != j and not is_zero(a[i][j])), None)
            if pair is None:
                break
            i, j = pair
            c = conj(a[i][j])
            cc = conj(c)
            for r in live:
                a[r][i] = field.add(a[r][i], mul(c, a[r][j]))
            for col in live:
                a[i][col] = field.add(a[i][col], mul(cc, a[j][col]))
            piv = i
        d = a[piv][piv]
        s = field.real_sign(d)
        if s > 0:
            pos += 1
        else:
            neg += 1
        dinv = field.inv(d)
        live.remove(piv)
        prow = a[piv]
        for r in live:
            arp = a[r][piv]
            if is_zero(arp):
                continue
            f = mul(arp, dinv)
            row = a[r]
            for col in live:
                pc = prow[col]
                if not is_zero(pc):
                    row[col] = sub(row[col], mul(f, pc))
    return Inertia(pos, neg, len(live))


def symmetric_form(v: SeifertMatrix) -> list[list[Fraction]]:
    """``V + V^T`` over Q; ``H(-1)`` is twice this."""
    return [[Fraction(x) for x in r] for r in v.symmetrized()]


def inertia_at_minus_one(v: SeifertMatrix) -> Inertia:
    return hermitian_inertia(symmetric_form(v), RationalField)


def form_over_field(v: SeifertMatrix, field: UnitCircleField, omega) -> list[list]:
    """``(1 - w) V + (1 - conj w) V^T`` with ``w`` an element of ``field``."""
    one = field.one
    u = field.sub(one, omega)
    ubar = field.conj(u)
    n = v.size
    rows = v.rows
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            x = field.add(field.scale(u, rows[i][j]), field.scale(ubar, rows[j][i]))
            row.append(x)
        out.append(row)
    return out


def inertia_at_root_of_unity(v: SeifertMatrix, theta: Fraction) -> Inertia:
    """Exact inertia at ``w = exp(2 pi i theta)`` via the cyclotomic field."""
    theta = Fraction(theta) % 1
    if theta == 0:
        return Inertia(0, 0, v.size)
    if theta == Fraction(1, 2):
        return inertia_at_minus_one(v)
    field = cyclotomic_field(theta.numerator, theta.denominator)
    return hermitian_inertia(form_over_field(v, field, field.gen), field)


def inertia_in_field(v: SeifertMatrix, field: UnitCircleField) -> Inertia:
    """Exact inertia at the generator of ``field``."""
    return hermitian_inertia(form_over_field(v, field, field.gen), field)


def hermitian_form(v: SeifertMatrix, omega: complex) -> np.ndarray:
    """Numerical ``H(w)`` as a complex numpy array."""
    vm = np.array(v.rows, dtype=float).reshape(v.size, v.size)
    omega = complex(omega)
    return (1 - omega) * vm + (1 - omega.conjugate()) * vm.T


def _dyadic_form(v: SeifertMatrix, omega: complex) -> list[list[tuple[Fraction, Fraction]]]:
    # H = (1 - x) S - i y A with x + iy the exact binary value of omega
    x, y = Fraction(omega.real), Fraction(omega.imag)
    s, a = v.symmetrized(), v.antisymmetrized()
    n = v.size
    return [[((1 - x) * s[i][j], -y * a[i][j]) for j in range(n)] for i in range(n)]


def inertia_float(v: SeifertMatrix, omega: complex) -> tuple[Inertia, bool]:
    """Inertia at a floating-point ``w``; second value tells whether the exact
    fallback ran."""
    if v.size == 0:
        return Inertia(0, 0, 0), False
    h = hermitian_form(v, omega)
    ev = np.linalg.eigvalsh(h)
    norm = np.abs(h).sum(axis=1).max()
    thr = ZERO_THRESHOLD * norm
    if norm == 0 or np.any(np.abs(ev) < ESCALATION_FACTOR * thr):
        return hermitian_inertia(_dyadic_form(v, complex(omega)), GaussianRationalField), True
    return Inertia(int((ev > thr).sum()), int((ev < -thr).sum()), int((np.abs(ev) <= thr).sum())), False
