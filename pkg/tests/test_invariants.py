import cmath
from fractions import Fraction

import pytest

from bingbound.catalog import DEFAULT_CATALOG, SHIPPED_WITH_MATRICES
from bingbound.errors import DomainError, NoMatrixForAtomError, TauUnknownForAtomError
from bingbound.expression import Atom, evaluate, parse
from bingbound.invariants import (
    AlexanderPolynomial,
    CertificateStatus,
    alexander,
    g3_certify,
    murasugi_signature,
    nu_from_name,
    sigma_nu,
    sigma_ratio_nu,
    signature_at,
    signature_at_rational,
    signature_at_theta,
    tau_nu,
)
from bingbound.seifert import torus_knot

from oracles import eig_inertia, eig_signature, sympy_alexander

# frozen from the eigenvalue oracle on V + V^T
MURASUGI = {
    "unknot": 0, "3_1": -2, "4_1": 0, "5_1": -4, "5_2": -2, "6_1": 0,
    "T(2,3)": -2, "T(2,5)": -4, "T(2,7)": -6, "T(3,4)": -6, "T(3,5)": -8,
    "twist(2)": 0, "twist(-2)": -2, "twist(3)": 0,
}


@pytest.mark.parametrize("name", SHIPPED_WITH_MATRICES)
def test_murasugi_frozen_and_oracle(name):
    v = DEFAULT_CATALOG.lookup(name).matrix
    assert murasugi_signature(Atom(name)) == MURASUGI[name] == eig_signature(v.rows)


def test_signature_at_special_points():
    k = parse("T(2,3)")
    assert signature_at(k, -1) == (-2, 0)
    assert signature_at(k, 1j) == (-2, 0)
    assert signature_at_theta(k, Fraction(1, 6)) == (-1, 1)
    # the float nearest the jump is a dyadic point just beside it
    assert signature_at(k, cmath.exp(2j * cmath.pi / 6)) in ((0, 0), (-2, 0))
    with pytest.raises(DomainError):
        signature_at(k, 1)
    with pytest.raises(DomainError):
        signature_at(k, 0.5)


def test_theta_and_rational_forms_agree():
    k = parse("T(3,4) # mirror(5_2)")
    for a, p in [(1, 3), (1, 12), (5, 12), (2, 7)]:
        v = signature_at_theta(k, Fraction(a, p))
        assert v.signature == signature_at_rational(k, a, p)
        assert tuple(v) == signature_at_theta(k, Fraction(a, p), direct=True)


def test_block_path_equals_direct_path():
    k = parse("4*(T(2,3) # rev(T(2,3)))")
    assert murasugi_signature(k) == murasugi_signature(k, direct=True) == -16


def test_raw_matrix_input():
    assert murasugi_signature(torus_knot(2, 5)) == -4


def test_alexander_known_values():
    assert alexander(parse("T(2,3)")).to_text() == "t - 1 + t^-1"
    assert alexander(parse("4_1")).to_text() == "-t + 3 - t^-1"
    assert alexander(parse("unknot")).to_text() == "1"
    assert alexander(parse("T(3,4)")).coeffs == (1, -1, 0, 1, 0, -1, 1)


@pytest.mark.parametrize("name", SHIPPED_WITH_MATRICES)
def test_alexander_vs_sympy(name):
    v = DEFAULT_CATALOG.lookup(name).matrix
    d = alexander(Atom(name))
    assert d.coeffs == sympy_alexander(v.rows)
    assert d(1) == 1


def test_alexander_multiplicative_and_reverse_invariant():
    a, b = alexander(parse("T(2,3)")), alexander(parse("5_2"))
    assert alexander(parse("T(2,3) # 5_2")) == a * b
    assert alexander(parse("rev(5_2)")) == b
    assert alexander(parse("mirror(5_2)")) == b
    assert alexander(parse("T(2,3) # mirror(T(2,3))")) == a**2


def test_alexander_rejects_asymmetric():
    with pytest.raises(ValueError):
        AlexanderPolynomial((1, 2))


def test_g3_certificates():
    assert g3_certify(parse("4_1")) == g3_certify(parse("T(2,3)"))
    c = g3_certify(parse("T(2,5) # 4_1"))
    assert (c.lower, c.upper, c.status) == (3, 3, CertificateStatus.EXACT)
    with pytest.raises(NoMatrixForAtomError):
        g3_certify(parse("D(T(2,3))"))


def test_g3_interval_for_trivial_alexander():
    # a genus-1 Seifert matrix of the unknot: Delta = 1, surface genus 1
    c = g3_certify(parse("[[0,1],[0,0]]"))
    assert (c.lower, c.upper, c.status) == (0, 1, CertificateStatus.INTERVAL)


def test_nu_invariants():
    k = parse("T(2,3) # T(2,3)")
    assert sigma_nu()(k) == -2
    assert sigma_ratio_nu(1, 3)(k) == -2
    assert tau_nu()(k) == 2
    assert tau_nu()(parse("mirror(D(T(2,3)))")) == -1
    with pytest.raises(TauUnknownForAtomError):
        tau_nu()(parse("4_1"))
    assert nu_from_name("sigma_p:1/3").name == "sigma_1/3/2"
    with pytest.raises(ValueError):
        nu_from_name("sigma_p:4/3")
    with pytest.raises(ValueError):
        nu_from_name("rho")


@pytest.mark.parametrize("theta", [0.05, 0.2, 0.37, 0.5, 0.61, 0.93])
def test_float_signature_vs_oracle(theta):
    k = parse("T(3,5) # mirror(4_1) # twist(3)")
    w = cmath.exp(2j * cmath.pi * theta)
    p, n, z = eig_inertia(evaluate(k).rows, w)
    assert signature_at(k, w) == (p - n, z)
