"""Exact fields with complex conjugation, used for Hermitian inertia.

Each field exposes the same small surface: ``zero``, ``one``, ``from_int``,
``add``, ``sub``, ``mul``, ``neg``, ``inv``, ``conj``, ``is_zero`` and
``real_sign`` (only defined on conjugation-fixed elements).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

import mpmath

from . import polynomials as P


class RationalField:
    """Q with trivial conjugation; elements are Fractions."""

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(n):
        return Fraction(n)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return 1 / a

    @staticmethod
    def conj(a):
        return a

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def real_sign(a):
        return (a > 0) - (a < 0)


class GaussianRationalField:
    """Q(i); elements are (re, im) pairs of Fractions."""

    zero = (Fraction(0), Fraction(0))
    one = (Fraction(1), Fraction(0))

    @staticmethod
    def from_int(n):
        return (Fraction(n), Fraction(0))

    @staticmethod
    def add(a, b):
        return (a[0] + b[0], a[1] + b[1])

    @staticmethod
    def sub(a, b):
        return (a[0] - b[0], a[1] - b[1])

    @staticmethod
    def mul(a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    @staticmethod
    def neg(a):
        return (-a[0], -a[1])

    @staticmethod
    def inv(a):
        n = a[0] * a[0] + a[1] * a[1]
        return (a[0] / n, -a[1] / n)

    @staticmethod
    def conj(a):
        return (a[0], -a[1])

    @staticmethod
    def is_zero(a):
        return a[0] == 0 and a[1] == 0

    @staticmethod
    def real_sign(a):
        if a[1] != 0:
            raise ValueError("element is not real")
        return (a[0] > 0) - (a[0] < 0)


def _poly_inverse_mod(a: P.Poly, m: P.Poly) -> P.Poly:
    """Inverse of ``a`` modulo the irreducible ``m`` by the extended Euclidean
    algorithm over Q."""
    r0, r1 = P.trim(m), P.trim(a)
    s0, s1 = (), (Fraction(1),)
    while P.degree(r1) > 0:
        q, r = P.divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, P.sub(s0, P.mul(q, s1))
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = Fraction(r1[0])
    return P.scale(s1, 1 / c)


class UnitCircleField:
    """``Q(omega) = Q[t]/(modulus)`` for an algebraic point ``omega`` on the
    unit circle, with complex conjugation ``t -> 1/t``.

    ``modulus`` must be the (irreducible) minimal polynomial of ``omega``.
    ``approx(prec)`` returns an mpmath complex approximation of ``omega`` at
    ``prec`` bits together with a bound on its error; it is only used to read
    off signs of real elements, which is exact because zero is decided
    algebraically first.
    """

    def __init__(self, modulus: P.Poly, approx: Callable[[int], tuple], label: str = ""):
        m = [Fraction(c) for c in P.trim(modulus)]
        lead = m[-1]
        self.modulus = tuple(c / lead for c in m)
        self.degree = len(self.modulus) - 1
        self.approx = approx
        self.label = label
        d = self.degree
        self.zero = (Fraction(0),) * d
        self.one = (Fraction(1),) + (Fraction(0),) * (d - 1)
        # t^k mod modulus for k in [d, 2d - 2]
        self._fold = []
        cur = tuple(-c for c in self.modulus[:-1])
        for _ in range(max(d - 1, 0)):
            self._fold.append(cur)
            shifted = (Fraction(0),) + cur[:-1]
            top = cur[-1]
            cur = tuple(shifted[i] + top * self._fold[0][i] for i in range(d))
        t_inv = _poly_inverse_mod((0, 1), self.modulus) if d > 1 else (1 / (-self.modulus[0]),)
        self._conj_powers = [self.one]
        tinv = self._pad(t_inv)
        for _ in range(1, d):
            self._conj_powers.append(self.mul(self._conj_powers[-1], tinv))

    def _pad(self, p) -> tuple:
        p = tuple(Fraction(c) for c in p)
        return p + (Fraction(0),) * (self.degree - len(p))

    def from_int(self, n):
        return (Fraction(n),) + (Fraction(0),) * (self.degree - 1)

    def power(self, k: int):
        """``omega^k`` for any integer ``k``."""
        if k < 0:
            return self.conj(self.power(-k))
        r, base = self.one, self.gen
        while k:
            if k & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            k >>= 1
        return r

    @property
    def gen(self):
        if self.degree == 1:
            return (-self.modulus[0],)
        return self._pad((0, 1))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def scale(self, a, c):
        return tuple(c * x for x in a)

    def mul(self, a, b):
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                fold = self._fold[k - d]
                for i in range(d):
                    out[i] += c * fold[i]
        return tuple(out)

    def inv(self, a):
        return self._pad(_poly_inverse_mod(P.trim(a), self.modulus))

    def conj(self, a):
        out = [Fraction(0)] * self.degree
        for k, c in enumerate(a):
            if c:
                for i, y in enumerate(self._conj_powers[k]):
                    out[i] += c * y
        return tuple(out)

    def is_zero(self, a):
        return not any(a)

    def real_sign(self, a) -> int:
        if self.is_zero(a):
            return 0
        if self.conj(a) != tuple(a):
            raise ValueError("element is not real")
        if self.degree == 1:
            return (a[0] > 0) - (a[0] < 0)
        l1 = sum(abs(c) for c in a)
        slope = sum(k * abs(c) for k, c in enumerate(a))
        prec = 64
        while True:
            with mpmath.workprec(prec + 20):
                w, delta = self.approx(prec)
                val = mpmath.mpf(0)
                acc = mpmath.mpc(1)
                for c in a:
                    if c:
                        val += (mpmath.mpf(c.numerator) / c.denominator) * acc.real
                    acc *= w
                err = 2 * slope * delta + (l1 + 1) * mpmath.mpf(2) ** (-prec + 8)
                if abs(val) > err:
                    return 1 if val > 0 else -1
            prec *= 2


def cyclotomic_field(a: int, p: int) -> UnitCircleField:
    """Field generated by ``omega = exp(2 pi i a / p)`` with ``gcd(a, p) = 1``."""

    def approx(prec):
        with mpmath.workprec(prec + 10):
            return mpmath.expjpi(mpmath.mpf(2 * a) / p), mpmath.mpf(2) ** (-prec)

    return UnitCircleField(P.cyclotomic(p), approx, label=f"exp(2*pi*i*{a}/{p})")
