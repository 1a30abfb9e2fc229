import json
from fractions import Fraction

import pytest

from bingbound.bing import reduce_to_companion
from bingbound.bounds import (
    FIGURE_EIGHT_PROBLEM,
    b4_profile,
    concordance_bound,
    full_report,
    infinite_order_check,
    s3_boundary_genus,
)
from bingbound.catalog import SHIPPED_WITH_MATRICES
from bingbound.errors import NoMatrixForAtomError, TauUnknownForAtomError
from bingbound.expression import Atom, parse
from bingbound.invariants import CertificateStatus, g3_certify, murasugi_signature, sigma_nu, sigma_ratio_nu, tau_nu

SIGMA = sigma_nu()


def test_concordance_examples():
    assert concordance_bound(parse("T(2,3)"), 2, SIGMA) == 4
    assert concordance_bound(parse("4_1"), 3, SIGMA) == 0
    for n in range(1, 5):
        assert concordance_bound(parse("D(T(2,3))"), n, tau_nu()) == 2**n


def test_concordance_errors():
    with pytest.raises(NoMatrixForAtomError):
        concordance_bound(parse("D(T(2,3))"), 1, SIGMA)
    with pytest.raises(TauUnknownForAtomError):
        concordance_bound(parse("4_1"), 1, tau_nu())
    with pytest.raises(ValueError):
        concordance_bound(parse("T(2,3)"), 0, SIGMA)


@pytest.mark.parametrize("name", SHIPPED_WITH_MATRICES)
@pytest.mark.parametrize("nu", [sigma_nu(), sigma_ratio_nu(1, 3)], ids=lambda nu: nu.name)
def test_two_paths_agree_and_double(name, nu):
    k = Atom(name)
    prev = None
    for n in range(1, 5):
        b = concordance_bound(k, n, nu)
        comp, _ = reduce_to_companion(n, k)
        assert b == abs(nu(comp))
        if prev is not None:
            assert b == 2 * prev
        prev = b


@pytest.mark.parametrize("name", SHIPPED_WITH_MATRICES)
def test_signature_below_genus(name):
    k = Atom(name)
    cert = g3_certify(k)
    assert cert.status is CertificateStatus.EXACT
    assert Fraction(abs(murasugi_signature(k)), 2) <= cert.upper
    assert concordance_bound(k, 2, SIGMA) <= s3_boundary_genus(k, 2).upper


def test_s3_examples():
    assert s3_boundary_genus(parse("4_1"), 3) == (8, 8, CertificateStatus.EXACT)
    assert s3_boundary_genus(parse("T(2,5)"), 1) == (4, 4, CertificateStatus.EXACT)
    assert s3_boundary_genus(parse("unknot"), 5) == (0, 0, CertificateStatus.EXACT)
    r = s3_boundary_genus(parse("[[0,1],[0,0]]"), 2)
    assert (r.lower, r.upper, r.status) == (0, 4, CertificateStatus.INTERVAL)


def test_b4_profile():
    assert b4_profile(1) == ([1, 0], 2)
    assert b4_profile(2) == ([1, 0, 0, 0], 2)
    genus, clasp = b4_profile(3)
    assert len(genus) == 8 and sum(genus) == 1 and clasp == 2


def test_infinite_order():
    assert infinite_order_check(parse("T(2,3)")) is True
    assert infinite_order_check(parse("4_1")) is None
    assert infinite_order_check(parse("unknot")) is None
    assert infinite_order_check(parse("T(2,3) # mirror(T(2,3))")) is None
    with pytest.raises(NoMatrixForAtomError):
        infinite_order_check(parse("D(T(2,3))"))


def test_report_trefoil():
    rep = full_report(parse("T(2,3)"), 3, [SIGMA])
    assert rep.lower_concordance == 8 and rep.lower_concordance_int == 8
    assert (rep.lower_s3, rep.upper_s3) == (8, 8)
    assert rep.b4_profile == ([1] + [0] * 7, 2)
    assert rep.infinite_order is True
    d = json.loads(rep.to_json())
    assert d["lower_concordance"] == "8/1"
    assert d["per_nu"]["sigma/2"] == {"bound": "8/1", "genus_at_least": 8}


def test_report_whitehead_double():
    rep = full_report(parse("D(T(2,3))"), 2, [tau_nu(), SIGMA])
    assert rep.lower_concordance == 4
    assert rep.lower_s3 is None and rep.upper_s3 is None
    assert "NoMatrixForAtomError" in rep.per_nu["sigma/2"]
    d = rep.to_dict()
    assert d["upper_s3"] == "unknown" and d["infinite_order"] == "unknown"
    assert d["b4_profile"] == {"genus": [1, 0, 0, 0], "clasp": 2}


def test_report_unknot_and_figure_eight():
    rep = full_report(parse("unknot"), 1, [SIGMA])
    assert rep.lower_concordance == 0 and rep.lower_s3 == 0 and rep.upper_s3 == 0
    rep = full_report(parse("4_1"), 2, [SIGMA])
    assert FIGURE_EIGHT_PROBLEM in rep.notes
    assert rep.lower_concordance == 0


def test_report_takes_max_over_nus():
    rep = full_report(parse("T(3,4)"), 1, [SIGMA, sigma_ratio_nu(1, 3)])
    # sigma(T(3,4)) = -6, sigma at 1/3 is -4
    assert rep.per_nu["sigma/2"] == 6 and rep.per_nu["sigma_1/3/2"] == 4
    assert rep.lower_concordance == 6
