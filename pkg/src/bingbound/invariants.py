"""Signature-type invariants, the Alexander polynomial and 3-genus bounds.

Expressions are evaluated block by block: the form of a connected sum is
block diagonal, so inertia (and hence signature and nullity) is computed
once per distinct diagonal block and added up.  ``direct=True`` forces the
full matrix through the same machinery instead.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, NamedTuple, Optional, Union

from .errors import DomainError, NoMatrixForAtomError, TauUnknownForAtomError
from .expression import (
    Atom,
    KnotExpression,
    Mirror,
    Multiple,
    RawMatrix,
    Reverse,
    Sum,
    block_counts,
    evaluate,
)
from .inertia import (
    EXACT_ORDER_LIMIT,
    Inertia,
    inertia_at_minus_one,
    inertia_at_root_of_unity,
    inertia_float,
)
from .seifert import SeifertMatrix, int_det

Knot = Union[KnotExpression, SeifertMatrix]


class SignatureValue(NamedTuple):
    signature: int
    nullity: int


def _expr(knot: Knot) -> KnotExpression:
    return RawMatrix(knot) if isinstance(knot, SeifertMatrix) else knot


def _catalog(catalog):
    if catalog is None:
        from .catalog import DEFAULT_CATALOG

        return DEFAULT_CATALOG
    return catalog


# -- inertia on blocks -----------------------------------------------------------


@lru_cache(maxsize=4096)
def _block_inertia_theta(v: SeifertMatrix, theta: Fraction) -> Inertia:
    if theta.denominator <= EXACT_ORDER_LIMIT:
        return inertia_at_root_of_unity(v, theta)
    omega = cmath.exp(2j * cmath.pi * (theta.numerator / theta.denominator))
    return inertia_float(v, omega)[0]


def _sum_blocks(knot: Knot, catalog, per_block: Callable[[SeifertMatrix], Inertia], direct: bool) -> Inertia:
    expr = _expr(knot)
    if direct:
        return per_block(evaluate(expr, catalog))
    total = Inertia(0, 0, 0)
    for v, k in block_counts(expr, catalog).items():
        total = total + per_block(v).times(k)
    return total


def _check_theta(theta) -> Fraction:
    theta = Fraction(theta)
    if not 0 < theta < 1:
        raise DomainError(f"theta = {theta} is outside the open interval (0, 1)")
    return theta


def inertia_at_theta(knot: Knot, theta, *, catalog=None, direct=False) -> Inertia:
    """Inertia of ``H(exp(2 pi i theta))`` for rational ``theta`` in (0, 1).

    Exact (cyclotomic arithmetic) for denominators up to 120, floating point
    with exact fallback beyond that.
    """
    theta = _check_theta(theta)
    catalog = _catalog(catalog)
    # H(conj w) = conj H(w) has the same inertia
    theta = min(theta, 1 - theta)
    return _sum_blocks(knot, catalog, lambda v: _block_inertia_theta(v, theta), direct)


def signature_at_theta(knot: Knot, theta, *, catalog=None, direct=False) -> SignatureValue:
    i = inertia_at_theta(knot, theta, catalog=catalog, direct=direct)
    return SignatureValue(i.signature, i.zero)


def signature_at(knot: Knot, omega: complex, *, catalog=None, direct=False) -> SignatureValue:
    """(signature, nullity) of the Levine-Tristram form at a unit complex ``omega``.

    ``omega == -1`` (and ``+-i``) are recognised and handled exactly; any other
    value is taken as the exact binary number it is, so a floating-point
    approximation of a jump point is evaluated at that nearby point, not at
    the jump.  Use :func:`signature_at_theta` for exact roots of unity.
    """
    omega = complex(omega)
    if abs(abs(omega) - 1) > 1e-9:
        raise DomainError(f"|omega| = {abs(omega)} is not 1")
    if omega == 1:
        raise DomainError("the Levine-Tristram form vanishes at omega = 1")
    exact = {complex(-1, 0): Fraction(1, 2), complex(0, 1): Fraction(1, 4), complex(0, -1): Fraction(3, 4)}
    if omega in exact:
        return signature_at_theta(knot, exact[omega], catalog=catalog, direct=direct)
    catalog = _catalog(catalog)
    i = _sum_blocks(knot, catalog, lambda v: inertia_float(v, omega)[0], direct)
    return SignatureValue(i.signature, i.zero)


def signature_at_rational(knot: Knot, a: int, p: int, *, catalog=None) -> int:
    """``sigma_{a/p}``: the signature at ``exp(2 pi i a / p)``, ``0 < a < p``."""
    if not 0 < a < p:
        raise DomainError(f"need 0 < a < p, got a={a}, p={p}")
    return signature_at_theta(knot, Fraction(a, p), catalog=catalog).signature


def murasugi_signature(knot: Knot, *, catalog=None, direct=False) -> int:
    catalog = _catalog(catalog)
    return _sum_blocks(knot, catalog, inertia_at_minus_one, direct).signature


# -- Alexander polynomial ----------------------------------------------------------


@dataclass(frozen=True)
class AlexanderPolynomial:
    """Symmetric Laurent polynomial with ``Delta(1) = 1``.

    ``coeffs[k]`` is the coefficient of ``t^(k - g)`` where ``g = (len - 1) / 2``.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[0] == 0 and c[-1] == 0:
            c = c[1:-1]
        object.__setattr__(self, "coeffs", tuple(c))
        if tuple(reversed(c)) != tuple(c) or len(c) % 2 == 0:
            raise ValueError(f"not a symmetric Laurent polynomial: {c}")

    @property
    def degree(self) -> int:
        """Top power of ``t``; half the Laurent span."""
        return (len(self.coeffs) - 1) // 2

    @property
    def span(self) -> int:
        return 2 * self.degree

    @property
    def symmetric(self) -> tuple[int, ...]:
        """``(a_0, a_1, ..., a_g)`` with ``Delta = a_0 + sum a_j (t^j + t^-j)``."""
        return self.coeffs[self.degree:]

    def __call__(self, t):
        g = self.degree
        return sum(c * t ** (k - g) for k, c in enumerate(self.coeffs))

    def __mul__(self, other: "AlexanderPolynomial") -> "AlexanderPolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return AlexanderPolynomial(tuple(out))

    def __pow__(self, n: int) -> "AlexanderPolynomial":
        r = ONE_POLY
        for _ in range(n):
            r = r * self
        return r

    def to_text(self) -> str:
        g = self.degree
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            e = k - g
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self) -> str:
        return self.to_text()


ONE_POLY = AlexanderPolynomial((1,))


@lru_cache(maxsize=1024)
def alexander_of_matrix(v: SeifertMatrix) -> AlexanderPolynomial:
    """``t^-g det(V - t V^T)`` by exact interpolation at ``t = 0..2g``."""
    n = v.size
    if n == 0:
        return ONE_POLY
    xs = list(range(n + 1))
    ys = []
    for t in xs:
        ys.append(int_det([[v.rows[i][j] - t * v.rows[j][i] for j in range(n)] for i in range(n)]))
    # Newton divided differences
    coef = [Fraction(y) for y in ys]
    for level in range(1, n + 1):
        for i in range(n, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    poly = [Fraction(0)] * (n + 1)
    for i in range(n, -1, -1):
        # poly = poly * (t - xs[i]) + coef[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [shifted[k] - xs[i] * poly[k] for k in range(n + 1)]
        poly[0] += coef[i]
    ints = tuple(int(c) for c in poly)
    assert all(c.denominator == 1 for c in poly)
    delta = AlexanderPolynomial(ints)
    assert delta(1) == 1, "det(V - V^T) = 1 forces Delta(1) = 1"
    return delta


def alexander(knot: Knot, *, catalog=None) -> AlexanderPolynomial:
    """Alexander polynomial, multiplicative over the diagonal blocks."""
    catalog = _catalog(catalog)
    result = ONE_POLY
    for v, k in block_counts(_expr(knot), catalog).items():
        result = result * alexander_of_matrix(v) ** k
    return result


# -- 3-genus ----------------------------------------------------------------------


class CertificateStatus(str, enum.Enum):
    EXACT = "Exact"
    INTERVAL = "Interval"


@dataclass(frozen=True)
class GenusThreeCertificate:
    lower: int
    upper: int

    def __post_init__(self):
        if not 0 <= self.lower <= self.upper:
            raise ValueError(f"bad certificate [{self.lower}, {self.upper}]")

    @property
    def status(self) -> CertificateStatus:
        return CertificateStatus.EXACT if self.lower == self.upper else CertificateStatus.INTERVAL


def _g3_upper(expr: KnotExpression, catalog) -> int:
    if isinstance(expr, Atom):
        entry = catalog.lookup(expr.name)
        bounds = [b for b in (entry.g3, entry.matrix.genus_bound if entry.matrix is not None else None) if b is not None]
        if not bounds:
            raise NoMatrixForAtomError(f"{expr.name} has neither a Seifert matrix nor a known genus")
        return min(bounds)
    if isinstance(expr, RawMatrix):
        return expr.matrix.genus_bound
    if isinstance(expr, Sum):
        return _g3_upper(expr.left, catalog) + _g3_upper(expr.right, catalog)
    if isinstance(expr, Multiple):
        return expr.count * _g3_upper(expr.inner, catalog)
    return _g3_upper(expr.inner, catalog)


def g3_certify(knot: Knot, *, catalog=None) -> GenusThreeCertificate:
    """Bracket the Seifert genus between half the Alexander span and the
    genus of the Seifert surface at hand (or the catalogued genus)."""
    catalog = _catalog(catalog)
    expr = _expr(knot)
    lower = alexander(expr, catalog=catalog).degree
    return GenusThreeCertificate(lower, _g3_upper(expr, catalog))


# -- nu invariants ----------------------------------------------------------------


@dataclass(frozen=True)
class NuInvariant:
    """An additive, reversal-invariant knot invariant bounding genus."""

    name: str
    evaluator: Callable[..., Fraction] = field(compare=False)
    additive: bool = True
    reverse_invariant: bool = True

    def __call__(self, knot: Knot, *, catalog=None) -> Fraction:
        return Fraction(self.evaluator(_expr(knot), _catalog(catalog)))


def sigma_nu() -> NuInvariant:
    """Half the Murasugi signature."""
    return NuInvariant("sigma/2", lambda e, c: Fraction(murasugi_signature(e, catalog=c), 2))


def sigma_ratio_nu(a: int, p: int) -> NuInvariant:
    """Half the Levine-Tristram signature at ``exp(2 pi i a / p)``."""
    if not 0 < a < p:
        raise DomainError(f"need 0 < a < p, got a={a}, p={p}")
    return NuInvariant(
        f"sigma_{a}/{p}/2", lambda e, c: Fraction(signature_at_rational(e, a, p, catalog=c), 2)
    )


def tau_of(expr: KnotExpression, catalog) -> int:
    """tau extended from catalog atoms by additivity, reversal invariance and
    ``tau(mirror K) = -tau(K)``."""
    if isinstance(expr, Atom):
        entry = catalog.lookup(expr.name)
        if entry.tau is None:
            raise TauUnknownForAtomError(f"no tau value known for {expr.name}")
        return entry.tau
    if isinstance(expr, RawMatrix):
        if expr.matrix.size == 0:
            return 0
        raise TauUnknownForAtomError("no tau value for a bare Seifert matrix")
    if isinstance(expr, Sum):
        return tau_of(expr.left, catalog) + tau_of(expr.right, catalog)
    if isinstance(expr, Multiple):
        return expr.count * tau_of(expr.inner, catalog)
    if isinstance(expr, Mirror):
        return -tau_of(expr.inner, catalog)
    if isinstance(expr, Reverse):
        return tau_of(expr.inner, catalog)
    raise TypeError(f"not a knot expression: {expr!r}")


def tau_nu() -> NuInvariant:
    return NuInvariant("tau", lambda e, c: Fraction(tau_of(e, c)))


def builtin_nus(a: int = 1, p: int = 3) -> list[NuInvariant]:
    return [sigma_nu(), sigma_ratio_nu(a, p), tau_nu()]


def nu_from_name(spec: str) -> NuInvariant:
    """``sigma``, ``tau`` or ``sigma_p:a/p``."""
    spec = spec.strip()
    if spec in ("sigma", "sigma/2"):
        return sigma_nu()
    if spec == "tau":
        return tau_nu()
    if spec.startswith("sigma_p:"):
        a, _, p = spec[len("sigma_p:"):].partition("/")
        try:
            return sigma_ratio_nu(int(a), int(p))
        except ValueError:
            pass
    raise ValueError(f"unknown nu {spec!r}; expected sigma, tau or sigma_p:a/p")
