"""Genus bounds for boundary links concordant to ``B_n(K)``.

* concordance: every component bounds genus at least ``2^n |nu(K)|``;
* in S^3: boundary genus is pinned between ``2^n`` times the certified
  3-genus bracket;
* in B^4: one genus-1 surface and disks for the rest, clasp number 2;
* algebraic order: a nonzero signature function means infinite order in
  the algebraic concordance group.

Unknown quantities are ``None``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import NamedTuple, Optional, Sequence

from .bing import reduce_to_companion
from .errors import BingBoundError
from .expression import KnotExpression, atoms, to_text
from .invariants import CertificateStatus, NuInvariant, _catalog, g3_certify, sigma_nu
from .signature_function import signature_function

FIGURE_EIGHT_PROBLEM = "FigureEightOpenProblem"
_FIGURE_EIGHT_NAMES = {"4_1", "twist(1)"}


class InconsistentBoundError(BingBoundError):
    """The direct and companion computations of a bound disagree."""


def concordance_bound(k: KnotExpression, n: int, nu: NuInvariant, *, catalog=None) -> Fraction:
    """``2^n |nu(k)|``, cross-checked against ``|nu|`` of the reduced companion."""
    if n < 1:
        raise ValueError("n must be at least 1")
    catalog = _catalog(catalog)
    direct = 2**n * abs(nu(k, catalog=catalog))
    companion, _ = reduce_to_companion(n, k)
    via_companion = abs(nu(companion, catalog=catalog))
    if direct != via_companion:
        raise InconsistentBoundError(
            f"{nu.name}: 2^n |nu(K)| = {direct} but |nu(companion)| = {via_companion}"
        )
    return direct


class S3Bounds(NamedTuple):
    lower: int
    upper: int
    status: CertificateStatus


def s3_boundary_genus(k: KnotExpression, n: int, *, catalog=None) -> S3Bounds:
    if n < 1:
        raise ValueError("n must be at least 1")
    cert = g3_certify(k, catalog=catalog)
    return S3Bounds(2**n * cert.lower, 2**n * cert.upper, cert.status)


def b4_profile(n: int) -> tuple[list[int], int]:
    """Component genera of the minimal B^4 surfaces and the clasp number."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return [1] + [0] * (2**n - 1), 2


def is_figure_eight(k: KnotExpression) -> bool:
    names = atoms(k)
    return bool(names) and all(a in _FIGURE_EIGHT_NAMES for a in names)


def infinite_order_check(k: KnotExpression, *, catalog=None) -> Optional[bool]:
    """True when some Levine-Tristram signature is nonzero; None (unknown)
    when the whole signature function vanishes."""
    sf = signature_function(k, catalog=catalog)
    return None if sf.is_identically_zero() else True


def fraction_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass
class GenusBoundReport:
    knot: KnotExpression
    n: int
    nu_names: list[str]
    companion: KnotExpression
    trace_digest: str
    per_nu: dict = field(default_factory=dict)
    lower_concordance: Optional[Fraction] = None
    lower_s3: Optional[int] = None
    upper_s3: Optional[int] = None
    s3_status: Optional[str] = None
    b4_profile: tuple = ()
    infinite_order: Optional[bool] = None
    notes: list[str] = field(default_factory=list)

    @property
    def lower_concordance_int(self) -> Optional[int]:
        return None if self.lower_concordance is None else floor(self.lower_concordance)

    def to_dict(self) -> dict:
        def unknown(x):
            return "unknown" if x is None else x

        per_nu = {}
        for name, entry in self.per_nu.items():
            if isinstance(entry, Fraction):
                per_nu[name] = {"bound": fraction_text(entry), "genus_at_least": floor(entry)}
            else:
                per_nu[name] = {"error": entry}
        genus, clasp = self.b4_profile
        return {
            "knot": to_text(self.knot),
            "n": self.n,
            "nu_names": list(self.nu_names),
            "companion": to_text(self.companion),
            "trace_digest": self.trace_digest,
            "per_nu": per_nu,
            "lower_concordance": unknown(
                None if self.lower_concordance is None else fraction_text(self.lower_concordance)
            ),
            "lower_concordance_genus": unknown(self.lower_concordance_int),
            "lower_s3": unknown(self.lower_s3),
            "upper_s3": unknown(self.upper_s3),
            "s3_status": unknown(self.s3_status),
            "b4_profile": {"genus": list(genus), "clasp": clasp},
            "infinite_order": unknown(self.infinite_order),
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def full_report(
    k: KnotExpression, n: int, nus: Optional[Sequence[NuInvariant]] = None, *, catalog=None
) -> GenusBoundReport:
    """Every bound above for ``B_n(k)``.  A failure of one part is recorded
    in ``per_nu`` or ``notes`` and the remaining parts still run."""
    catalog = _catalog(catalog)
    nus = list(nus) if nus else [sigma_nu()]
    companion, trace = reduce_to_companion(n, k)
    rep = GenusBoundReport(k, n, [nu.name for nu in nus], companion, trace.digest(), b4_profile=b4_profile(n))
    for nu in nus:
        try:
            rep.per_nu[nu.name] = concordance_bound(k, n, nu, catalog=catalog)
        except BingBoundError as exc:
            rep.per_nu[nu.name] = f"{type(exc).__name__}: {exc}"
    found = [v for v in rep.per_nu.values() if isinstance(v, Fraction)]
    rep.lower_concordance = max(found) if found else None
    try:
        s3 = s3_boundary_genus(k, n, catalog=catalog)
        rep.lower_s3, rep.upper_s3, rep.s3_status = s3.lower, s3.upper, s3.status.value
    except BingBoundError as exc:
        rep.notes.append(f"s3 bounds unknown: {type(exc).__name__}: {exc}")
    try:
        rep.infinite_order = infinite_order_check(k, catalog=catalog)
        if rep.infinite_order is None and is_figure_eight(k):
            rep.notes.append(FIGURE_EIGHT_PROBLEM)
    except BingBoundError as exc:
        rep.notes.append(f"algebraic order unknown: {type(exc).__name__}: {exc}")
    return rep
