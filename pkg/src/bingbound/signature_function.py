"""The Levine-Tristram signature as an exact step function of theta in (0, 1).

Jumps can only sit at ``theta`` with ``exp(2 pi i theta)`` a root of the
Alexander polynomial.  Writing ``Delta`` in ``z = t + 1/t`` turns unit-circle
roots into real roots ``z = 2 cos(2 pi theta)`` in ``(-2, 2)``; those are
isolated with Sturm sequences on each irreducible factor.  Every root found is
kept as a breakpoint, so the nullity there is recorded even when the
signature does not change across it.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd
from typing import Optional

import mpmath

from . import polynomials as P
from .fields import UnitCircleField, cyclotomic_field
from .inertia import inertia_in_field
from .invariants import (
    Knot,
    SignatureValue,
    _catalog,
    _expr,
    _sum_blocks,
    alexander,
    signature_at_theta,
)


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    value = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -value if sign else value


def _theta_of_z(z: Fraction, prec: int):
    with mpmath.workprec(prec + 30):
        return mpmath.acos(mpmath.mpf(z.numerator) / z.denominator / 2) / (2 * mpmath.pi)


@dataclass(frozen=True)
class Jump:
    """One breakpoint ``theta`` of the signature function.

    ``z_interval`` isolates ``2 cos(2 pi theta)`` as a root of ``z_minpoly``;
    ``t_minpoly`` is the minimal polynomial of ``exp(2 pi i theta)``.  When
    that point is a root of unity ``exact`` holds ``theta`` as a Fraction.
    """

    z_minpoly: P.Poly
    t_minpoly: P.Poly
    z_interval: tuple[Fraction, Fraction]
    upper: bool
    theta_lo: Fraction
    theta_hi: Fraction
    exact: Optional[Fraction] = None

    @classmethod
    def build(cls, z_minpoly, t_minpoly, z_interval, upper=False, exact=None, prec=64):
        j = cls(z_minpoly, t_minpoly, z_interval, upper, Fraction(0), Fraction(1), exact)
        return j.refined(prec)

    def refined(self, prec: int) -> "Jump":
        if self.exact is not None:
            return replace(self, theta_lo=self.exact, theta_hi=self.exact)
        lo, hi = P.refine_root(self.z_minpoly, self.z_interval, Fraction(1, 2**prec))
        pad = Fraction(1, 2 ** (prec + 8))
        t_lo = _mpf_to_fraction(_theta_of_z(hi, prec)) - pad
        t_hi = _mpf_to_fraction(_theta_of_z(lo, prec)) + pad
        if self.upper:
            t_lo, t_hi = 1 - t_hi, 1 - t_lo
        return replace(self, z_interval=(lo, hi), theta_lo=t_lo, theta_hi=t_hi)

    def width(self) -> Fraction:
        return self.theta_hi - self.theta_lo

    def mirrored(self) -> "Jump":
        exact = None if self.exact is None else 1 - self.exact
        return replace(
            self, upper=not self.upper, theta_lo=1 - self.theta_hi, theta_hi=1 - self.theta_lo, exact=exact
        )

    def approx(self, digits: int = 12) -> str:
        if self.exact is not None:
            return f"{self.exact.numerator}/{self.exact.denominator}"
        return f"{float(self.theta_lo + self.theta_hi) / 2:.{digits}f}"

    def enclosure_text(self, digits: int = 12) -> str:
        """Decimal enclosure ``[lo, hi]`` rounded outward to ``digits`` places,
        or the exact fraction for roots of unity."""
        if self.exact is not None:
            return f"{self.exact.numerator}/{self.exact.denominator}"
        j = self
        while j.width() > Fraction(1, 10 ** (digits + 2)):
            j = j.refined(int((digits + 4) * 3.33) + 8)
        scale = 10**digits
        lo = Fraction(int((j.theta_lo * scale).__floor__()), scale)
        hi = Fraction(int((j.theta_hi * scale).__ceil__()), scale)
        return f"[{_dec(lo, digits)}, {_dec(hi, digits)}]"

    def field(self) -> UnitCircleField:
        """``Q(omega)`` for ``omega = exp(2 pi i theta)``, ``theta`` in the lower half."""
        if self.exact is not None:
            th = min(self.exact, 1 - self.exact)
            return cyclotomic_field(th.numerator, th.denominator)
        poly, iv = self.z_minpoly, self.z_interval

        def approx(prec):
            lo, hi = P.refine_root(poly, iv, Fraction(1, 2**prec))
            with mpmath.workprec(prec + 20):
                r = (mpmath.mpf(lo.numerator) / lo.denominator + mpmath.mpf(hi.numerator) / hi.denominator) / 2
                y = mpmath.sqrt(1 - r * r / 4)
                w = mpmath.mpc(r / 2, y)
                delta = (mpmath.mpf((hi - lo).numerator) / (hi - lo).denominator) * (1 + 2 / y)
            return w, delta

        return UnitCircleField(self.t_minpoly, approx, label=P.to_text(self.t_minpoly))


def _dec(x: Fraction, digits: int) -> str:
    sign = "-" if x < 0 else ""
    x = abs(x)
    whole = x.numerator // x.denominator
    frac = x - whole
    return f"{sign}{whole}.{int(frac * 10**digits):0{digits}d}"


def _root_of_unity(h: P.Poly, z_iv: tuple[Fraction, Fraction], z_poly: P.Poly) -> Optional[Fraction]:
    d = P.degree(h)
    for m in range(3, 2 * d * d + 3):
        if P.totient(m) != d or P.cyclotomic(m) != h:
            continue
        cands = [Fraction(a, m) for a in range(1, (m + 1) // 2) if gcd(a, m) == 1 and 2 * a < m]
        iv = z_iv
        while True:
            hits = []
            for th in cands:
                z = 2 * mpmath.cos(2 * mpmath.pi * th.numerator / th.denominator)
                if iv[0] - Fraction(1, 2**40) <= _mpf_to_fraction(z) <= iv[1] + Fraction(1, 2**40):
                    hits.append(th)
            if len(hits) == 1:
                return hits[0]
            iv = P.refine_root(z_poly, iv, (iv[1] - iv[0]) / 1024 or Fraction(1, 2**60))
            if iv[0] == iv[1]:
                return None
    return None


def _t_minpoly(f: P.Poly, z_iv) -> P.Poly:
    factors = [h for h, _ in P.factor_integer(P.z_to_t(f))]
    if len(factors) == 1:
        return factors[0]
    prec = 80
    while True:
        lo, hi = P.refine_root(f, z_iv, Fraction(1, 2**prec))
        with mpmath.workprec(prec + 20):
            r = mpmath.mpf(lo.numerator) / lo.denominator
            w = mpmath.mpc(r / 2, mpmath.sqrt(1 - r * r / 4))
            vals = sorted((abs(P.evaluate(tuple(mpmath.mpf(c) for c in h), w)), i) for i, h in enumerate(factors))
        if vals[0][0] < mpmath.mpf(2) ** (-prec // 2) < vals[1][0]:
            return factors[vals[0][1]]
        prec *= 2


def unit_circle_jumps(knot: Knot, *, catalog=None, prec: int = 64) -> list[Jump]:
    """Breakpoints in ``(0, 1/2)`` (increasing), from the Alexander polynomial."""
    delta = alexander(knot, catalog=catalog)
    zpoly = P.palindromic_to_z(delta.symmetric)
    jumps = []
    for f, _mult in P.factor_integer(zpoly):
        for iv in P.isolate_real_roots(f, -2, 2):
            h = _t_minpoly(f, iv)
            exact = _root_of_unity(h, iv, f)
            jumps.append(Jump.build(f, h, iv, upper=False, exact=exact, prec=prec))
    jumps.sort(key=lambda j: j.theta_lo)
    # refine until enclosures are pairwise disjoint
    while any(a.theta_hi >= b.theta_lo for a, b in zip(jumps, jumps[1:])):
        prec *= 2
        jumps = sorted((j.refined(prec) for j in jumps), key=lambda j: j.theta_lo)
    return jumps


@dataclass(frozen=True)
class SignatureFunction:
    """``theta -> sigma_theta`` on (0, 1) as jumps, plateaus and at-jump values.

    ``plateau_values[i]`` holds on the open interval between ``jumps[i-1]``
    and ``jumps[i]`` (with 0 and 1 as outer ends); ``samples[i]`` is the
    rational point where it was evaluated.
    """

    jumps: tuple[Jump, ...]
    plateau_values: tuple[int, ...]
    at_jump: tuple[SignatureValue, ...]
    samples: tuple[Fraction, ...]

    def is_identically_zero(self) -> bool:
        return not any(self.plateau_values) and not any(v.signature for v in self.at_jump)

    def plateau_index(self, theta) -> Optional[int]:
        """Index of the plateau containing ``theta``, or None if ``theta`` is a jump."""
        theta = Fraction(theta)
        idx = 0
        for j in self.jumps:
            if j.exact is not None:
                if theta == j.exact:
                    return None
                if theta > j.exact:
                    idx += 1
                continue
            prec = 64
            while j.theta_lo <= theta <= j.theta_hi:
                prec *= 2
                j = j.refined(prec)
            if theta > j.theta_hi:
                idx += 1
        return idx

    def value(self, theta) -> SignatureValue:
        theta = Fraction(theta)
        if not 0 < theta < 1:
            from .errors import DomainError

            raise DomainError(f"theta = {theta} is outside (0, 1)")
        idx = self.plateau_index(theta)
        if idx is None:
            k = next(i for i, j in enumerate(self.jumps) if j.exact == theta)
            return self.at_jump[k]
        return SignatureValue(self.plateau_values[idx], 0)

    def left_limit(self, k: int) -> int:
        return self.plateau_values[k]

    def right_limit(self, k: int) -> int:
        return self.plateau_values[k + 1]

    def plateau_bounds(self, digits: int = 12) -> list[tuple[str, str]]:
        ends = ["0"] + [j.approx(digits) for j in self.jumps] + ["1"]
        return list(zip(ends, ends[1:]))

    def to_csv(self, digits: int = 12) -> str:
        """Plateau rows ``theta_lo,theta_hi,signature`` then jump rows
        ``theta,signature,nullity``, with a leading ``kind`` column and a
        trailing comment column carrying the minimal polynomial of each jump."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kind", "theta_lo", "theta_hi", "signature", "nullity", "comment"])
        for (lo, hi), s in zip(self.plateau_bounds(digits), self.plateau_values):
            w.writerow(["plateau", lo, hi, s, "", ""])
        for j, v in zip(self.jumps, self.at_jump):
            theta = j.enclosure_text(digits)
            w.writerow(["jump", theta, theta, v.signature, v.nullity, f"minpoly {P.to_text(j.t_minpoly)}"])
        return buf.getvalue()


def _sample_points(lower: list[Jump]) -> list[Fraction]:
    if not lower:
        return [Fraction(1, 2)]
    pts = [P.simplest_between(Fraction(0), lower[0].theta_lo)]
    for a, b in zip(lower, lower[1:]):
        pts.append(P.simplest_between(a.theta_hi, b.theta_lo))
    pts.append(P.simplest_between(lower[-1].theta_hi, 1 - lower[-1].theta_hi))
    return pts


def signature_function(knot: Knot, *, catalog=None) -> SignatureFunction:
    catalog = _catalog(catalog)
    expr = _expr(knot)
    lower = unit_circle_jumps(expr, catalog=catalog)
    half = _sample_points(lower)
    half_values = [signature_at_theta(expr, th, catalog=catalog) for th in half]
    for th, v in zip(half, half_values):
        assert v.nullity == 0, f"sample {th} hit a root of the Alexander polynomial"
    at_lower = []
    for j in lower:
        field = j.field()
        inertia = _sum_blocks(expr, catalog, lambda v, f=field: inertia_in_field(v, f), False)
        at_lower.append(SignatureValue(inertia.signature, inertia.zero))
    jumps = tuple(lower) + tuple(j.mirrored() for j in reversed(lower))
    samples = tuple(half) + tuple(1 - th for th in reversed(half[:-1]))
    values = tuple(v.signature for v in half_values) + tuple(v.signature for v in reversed(half_values[:-1]))
    at_jump = tuple(at_lower) + tuple(reversed(at_lower))
    return SignatureFunction(jumps, values, at_jump, samples)
