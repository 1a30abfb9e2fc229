"""Independent reference computations used to check the production code.

Nothing here imports bingbound's linear algebra: signatures come from dense
floating eigenvalues and Alexander polynomials from sympy determinants.
"""

import numpy as np
import sympy as sp

EIG_TOL = 1e-9


def eig_inertia(rows, omega):
    """(positive, negative, zero) of (1 - w) V + (1 - conj w) V^T by eigvalsh."""
    if not rows:
        return (0, 0, 0)
    v = np.array(rows, dtype=float)
    omega = complex(omega)
    h = (1 - omega) * v + (1 - omega.conjugate()) * v.T
    ev = np.linalg.eigvalsh(h)
    scale = max(1.0, np.abs(h).sum(axis=1).max())
    tol = EIG_TOL * scale
    return (int((ev > tol).sum()), int((ev < -tol).sum()), int((np.abs(ev) <= tol).sum()))


def eig_signature(rows, omega=-1):
    p, n, _ = eig_inertia(rows, omega)
    return p - n


def sympy_alexander(rows):
    """Coefficients (low to high) of t^(-g) det(V - t V^T), g = size / 2."""
    if not rows:
        return (1,)
    t = sp.Symbol("t")
    m = sp.Matrix(rows)
    poly = sp.Poly(sp.expand((m - t * m.T).det()), t)
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    # drop the t^0..t^(lowest-1) zeros so the list is the Laurent window
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    return tuple(coeffs)
