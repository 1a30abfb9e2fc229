"""Exact univariate polynomial arithmetic over the rationals.

Polynomials are tuples of coefficients, lowest degree first.  Only what the
signature machinery needs is here: Sturm sequences, real root isolation by
bisection, the ``z = t + 1/t`` transform of palindromic polynomials, and
factorisation over the integers (delegated to sympy).
"""

from __future__ import annotations

from fractions import Fraction
from math import floor
from typing import Sequence

Poly = tuple


def trim(p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p: Poly) -> int:
    return len(trim(p)) - 1


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, tuple(-c for c in q))


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def scale(p: Poly, c) -> Poly:
    return trim([c * a for a in p])


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in p]
    dq = len(q) - 1
    lead = Fraction(q[-1])
    quot = [Fraction(0)] * max(len(p) - dq, 1)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k] / lead
        if c:
            quot[k - dq] = c
            for j in range(dq + 1):
                r[k - dq + j] -= c * q[j]
    return trim(quot), trim(r[:dq] if dq else [])


def evaluate(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return trim([i * p[i] for i in range(1, len(p))])


def interval_eval(p: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Rational enclosure of ``p`` over ``[lo, hi]`` by interval Horner."""
    a = b = Fraction(0)
    for c in reversed(p):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [trim(p), derivative(p)]
    while seq[-1] and degree(seq[-1]) > 0:
        _, r = divmod_poly(seq[-2], seq[-1])
        if not r:
            break
        seq.append(scale(r, -1))
    return [s for s in seq if s]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_variations(seq: list[Poly], x) -> int:
    signs = [s for s in (_sign(evaluate(q, x)) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: list[Poly], lo, hi) -> int:
    """Distinct real roots in the half-open interval ``(lo, hi]``."""
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def isolate_real_roots(p: Poly, lo, hi) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals, one per distinct root of the squarefree
    polynomial ``p`` in the open interval ``(lo, hi)``.

    A rational root met during bisection comes back as ``(r, r)``; any other
    interval ``(a, b)`` has ``p(a) * p(b) < 0``.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    seq = sturm_sequence(p)
    out = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = count_roots(seq, a, b)
        if n == 0:
            continue
        if n == 1:
            if evaluate(p, b) == 0:
                out.append((b, b))
            elif evaluate(p, a) == 0:
                # a is a root already reported (or lo); move the left end
                # off it without passing the root inside (a, b]
                while True:
                    m = (a + b) / 2
                    if evaluate(p, m) == 0:
                        out.append((m, m))
                        break
                    if count_roots(seq, a, m) == 0:
                        out.append((m, b))
                        break
                    b = m
            else:
                out.append((a, b))
            continue
        m = (a + b) / 2
        stack.append((a, m))
        stack.append((m, b))
    return sorted(iv for iv in out if iv != (hi, hi))


def refine_root(p: Poly, interval: tuple[Fraction, Fraction], width) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval of a simple root down to ``width``."""
    a, b = interval
    if a == b:
        return a, b
    sa = _sign(evaluate(p, a))
    while b - a > width:
        m = (a + b) / 2
        sm = _sign(evaluate(p, m))
        if sm == 0:
            return m, m
        if sm == sa:
            a = m
        else:
            b = m
    return a, b


def chebyshev_like(k: int) -> list[Poly]:
    """``C_j(z)`` with ``t^j + t^-j = C_j(t + 1/t)`` for ``j = 0..k`` (``C_0 = 2``)."""
    cs: list[Poly] = [(2,), (0, 1)]
    while len(cs) <= k:
        cs.append(sub(mul((0, 1), cs[-1]), cs[-2]))
    return cs[: k + 1]


def palindromic_to_z(sym: Sequence[int]) -> Poly:
    """Transform a symmetric Laurent polynomial ``a_0 + sum a_j (t^j + t^-j)``,
    given as ``(a_0, a_1, ..., a_g)``, into a polynomial in ``z = t + 1/t``."""
    cs = chebyshev_like(len(sym) - 1)
    out: Poly = (sym[0],) if sym else ()
    for j in range(1, len(sym)):
        out = add(out, scale(cs[j], sym[j]))
    return out


def z_to_t(f: Poly) -> Poly:
    """``t^deg(f) * f(t + 1/t)`` as an ordinary polynomial in ``t``."""
    k = degree(f)
    out: Poly = ()
    # (t^2 + 1)^j * t^(k - j)
    base: Poly = (1,)
    for j, c in enumerate(f):
        if c:
            out = add(out, scale(tuple([0] * (k - j)) + base, c))
        base = mul(base, (1, 0, 1))
    return out


def primitive_integer(p: Poly) -> Poly:
    """Scale a rational polynomial to a primitive integer polynomial with
    positive leading coefficient."""
    from math import gcd, lcm

    p = trim([Fraction(c) for c in p])
    if not p:
        return ()
    den = 1
    for c in p:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return tuple(c // g for c in ints)


def factor_integer(p: Poly) -> list[tuple[Poly, int]]:
    """Irreducible factors over Z (content dropped) with multiplicities."""
    import sympy

    p = primitive_integer(p)
    if degree(p) < 1:
        return []
    x = sympy.Symbol("x")
    expr = sympy.Poly(list(reversed(p)), x, domain="ZZ")
    _, factors = expr.factor_list()
    out = []
    for f, mult in factors:
        coeffs = tuple(int(c) for c in reversed(f.all_coeffs()))
        out.append((primitive_integer(coeffs), mult))
    out.sort(key=lambda fm: (degree(fm[0]), fm[0]))
    return out


def cyclotomic(m: int) -> Poly:
    import sympy

    x = sympy.Symbol("x")
    return tuple(int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()))


def totient(m: int) -> int:
    from sympy import totient as _tot

    return int(_tot(m))


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational with the smallest denominator strictly inside ``(lo, hi)``,
    found by walking the Stern-Brocot tree."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("empty interval")
    fl = floor(lo)
    if fl + 1 < hi:
        return Fraction(fl + 1)
    # both in [fl, fl+1]; recurse on reciprocals of fractional parts
    a, b = lo - fl, hi - fl
    if a == 0:
        # (0, b): 1/n with n the smallest integer above 1/b
        n = floor(1 / b) + 1
        return fl + Fraction(1, n)
    inner = simplest_between(1 / b, 1 / a)
    return fl + 1 / inner


def to_text(p: Poly, var: str = "t") -> str:
    """Human-readable polynomial, highest degree first."""
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            coef = "" if mag == 1 else f"{mag}*"
            body = coef + (var if k == 1 else f"{var}^{k}")
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s
