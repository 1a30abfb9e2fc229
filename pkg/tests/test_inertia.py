import cmath
from fractions import Fraction

import numpy as np
import pytest

from bingbound.fields import GaussianRationalField, RationalField, UnitCircleField, cyclotomic_field
from bingbound.inertia import (
    Inertia,
    hermitian_inertia,
    inertia_at_minus_one,
    inertia_at_root_of_unity,
    inertia_float,
)
from bingbound.seifert import block_sum, torus_knot, twist_knot

from oracles import eig_inertia


def test_rational_inertia_with_zero_diagonal():
    # [[0, 1], [1, 0]] has inertia (1, 1, 0); needs the congruence pivot
    h = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    assert hermitian_inertia(h, RationalField) == Inertia(1, 1, 0)


def test_gaussian_inertia_offdiagonal_imaginary():
    z, i = (Fraction(0), Fraction(0)), (Fraction(0), Fraction(1))
    h = [[z, i], [(Fraction(0), Fraction(-1)), z]]
    assert hermitian_inertia(h, GaussianRationalField) == Inertia(1, 1, 0)


def test_degenerate_form():
    h = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert hermitian_inertia(h, RationalField) == Inertia(1, 0, 1)


def test_cyclotomic_field_arithmetic():
    f = cyclotomic_field(1, 6)
    w = f.gen
    assert f.power(6) == f.one
    assert f.mul(w, f.conj(w)) == f.one
    assert f.mul(w, f.inv(w)) == f.one
    # w + conj w = 2 cos(pi/3) = 1
    assert f.add(w, f.conj(w)) == f.one
    assert f.real_sign(f.sub(f.add(w, f.conj(w)), f.from_int(2))) == -1


def test_real_sign_on_degree_four_field():
    f = cyclotomic_field(1, 10)
    x = f.add(f.gen, f.conj(f.gen))  # 2 cos(pi/5) = golden ratio
    assert f.real_sign(f.sub(x, f.from_int(1))) == 1
    assert f.real_sign(f.sub(x, f.from_int(2))) == -1
    with pytest.raises(ValueError):
        f.real_sign(f.gen)


@pytest.mark.parametrize("theta", [Fraction(1, 6), Fraction(1, 3), Fraction(1, 4), Fraction(2, 5), Fraction(1, 10)])
@pytest.mark.parametrize("v", [torus_knot(2, 3), torus_knot(2, 5), torus_knot(3, 4), twist_knot(1), twist_knot(-2)])
def test_root_of_unity_matches_oracle(v, theta):
    omega = cmath.exp(2j * cmath.pi * float(theta))
    assert tuple(inertia_at_root_of_unity(v, theta)) == eig_inertia(v.rows, omega)


def test_minus_one():
    assert inertia_at_minus_one(torus_knot(2, 3)) == Inertia(0, 2, 0)
    assert inertia_at_minus_one(block_sum(torus_knot(2, 3), torus_knot(2, 3).mirror())).signature == 0


def test_float_path_and_escalation():
    v = torus_knot(2, 3)
    res, escalated = inertia_float(v, cmath.exp(2j * cmath.pi * 0.3))
    assert res == Inertia(0, 2, 0) and not escalated
    # a float point on top of the jump at 1/6 is settled exactly on its dyadic value
    near = complex(0.5, 3**0.5 / 2)
    res, escalated = inertia_float(v, near)
    assert escalated
    assert sum(res) == 2


def test_float_path_random_points_vs_oracle():
    rng = np.random.default_rng(7)
    v = torus_knot(3, 5)
    for theta in rng.uniform(0, 1, 20):
        w = cmath.exp(2j * cmath.pi * theta)
        assert tuple(inertia_float(v, w)[0]) == eig_inertia(v.rows, w)


def test_unit_circle_field_real_algebraic_point():
    # omega root of 2t^2 - 3t + 2 (the 5_2 jump); omega + conj omega = 3/2
    def approx(prec):
        import mpmath

        with mpmath.workprec(prec + 10):
            return mpmath.mpc(mpmath.mpf(3) / 4, mpmath.sqrt(7) / 4), mpmath.mpf(2) ** -prec

    f = UnitCircleField((2, -3, 2), approx)
    s = f.add(f.gen, f.conj(f.gen))
    assert s == (Fraction(3, 2), Fraction(0))
    assert f.real_sign(f.sub(s, f.from_int(1))) == 1
