"""Independent reference computations shared by several test modules.

Everything here goes through sympy or elementary closed forms; none of it
touches the Newton power-sum machinery under test.
"""
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np
import sympy as sp

a, h, y = sp.symbols("a h y")


@lru_cache(maxsize=None)
def _raw_coefficients(expr, n):
    s = sp.series(expr, a, 0, n + 1).removeO()
    return tuple(sp.simplify(s.coeff(a, k)) for k in range(n + 1))


def series_coefficients(expr, n):
    """Taylor coefficients of ``expr`` in ``a`` up to ``a^n``.

    ``NORMALIZED`` is expanded as ``Q(a(1+y))/(1+y)`` from the series of ``Q``.
    """
    if expr is NORMALIZED:
        raw = _raw_coefficients(hirzebruch_expr(), n)
        return [sp.expand(c * (1 + y) ** (k - 1)) for k, c in enumerate(raw)]
    return list(_raw_coefficients(expr, n))


def split_class_on_pn(expr, degrees, n):
    """``prod_i Q(d_i h)`` in ``Q[h, y]/(h^(n+1))`` for ``Q(a) = expr``."""
    coefs = series_coefficients(expr, n)
    out = [sp.Integer(1)] + [sp.Integer(0)] * n
    for d in degrees:
        factor = [c * d ** k for k, c in enumerate(coefs)]
        out = [sp.expand(sum(out[i] * factor[k - i] for i in range(k + 1))) for k in range(n + 1)]
    return sum(c * h ** k for k, c in enumerate(out))


def class_to_sympy(cls):
    """A class on projective space written in ``h`` and ``y``."""
    out = sp.Integer(0)
    for (e, i), c in cls.terms.items():
        out += sp.Rational(c.numerator, c.denominator) * y ** e * h ** cls.ring.degrees[i]
    return sp.expand(out / (1 + y) ** cls.den)


NORMALIZED = object()


def hirzebruch_expr(normalized=False):
    """``a(1 + y e^-a)/(1 - e^-a)``; the normalized series is a marker."""
    if normalized:
        return NORMALIZED
    return a * (1 + y * sp.exp(-a)) / (1 - sp.exp(-a))


TODD = a / (1 - sp.exp(-a))
L_SERIES = a / sp.tanh(a)


def h0_line_p1(d):
    return d + 1 if d >= 0 else 0


def euler_char_line_p1(d):
    """``h^0 - h^1`` of O(d) on P^1 with ``h^1(O(d)) = h^0(O(-2-d))``."""
    return h0_line_p1(d) - h0_line_p1(-2 - d)


def euler_char_line_pn(n, d):
    """``chi(P^n, O(d))`` from the Hilbert polynomial binom(d+n, n)."""
    num = 1
    for k in range(1, n + 1):
        num *= d + k
    return Fraction(num, factorial(n))


def chi_y_pn(n):
    return sum((-y) ** k for k in range(n + 1))


def dense_mul(p, q):
    """Product of Laurent polynomials by shifting to nonnegative exponents and convolving."""
    cls = type(p)
    if p.is_zero() or q.is_zero():
        return cls()
    lp, lq = p.low_degree, q.low_degree
    dp = np.array([p.coeff(e) for e in range(lp, p.degree + 1)], dtype=object)
    dq = np.array([q.coeff(e) for e in range(lq, q.degree + 1)], dtype=object)
    return cls({lp + lq + k: int(c) for k, c in enumerate(np.convolve(dp, dq))})
