"""Multiplicative characteristic classes from power series.

A series ``Q(a) = q_0 + q_1 a + ...`` defines the class ``prod_j Q(a_j)`` over
the Chern roots ``a_j`` of a bundle.  No roots are ever formed: writing
``Q = q_0 exp(sum_k b_k a^k)`` turns the product into

    q_0^rank * exp(sum_k b_k p_k)

with power sums ``p_k`` obtained from Chern classes by Newton's identities.
Everything is truncated at the ring's top degree.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from ..errors import InconsistencyError, ValidationError
from ..polycore import LaurentPolynomial, YRational
from .classes import Bundle, ClassPolynomial

__all__ = [
    "power_sums",
    "genus_from_series",
    "chern_character",
    "todd_class",
    "lambda_y_class",
    "hirzebruch_class",
    "todd_series",
    "hirzebruch_series",
    "lambda_series",
    "series_from_expression",
]

_Y = LaurentPolynomial.y()
_ONE_PLUS_Y = 1 + _Y


def _smul(a: Sequence, b: Sequence, n: int) -> list:
    out = [YRational(0)] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if not x:
            continue
        for j, z in enumerate(b[: n + 1 - i]):
            if z:
                out[i + j] = out[i + j] + x * z
    return out


@lru_cache(maxsize=None)
def todd_series(n: int) -> tuple[Fraction, ...]:
    """Coefficients of ``a / (1 - e^(-a))`` up to ``a^n``."""
    # invert (1 - e^(-a))/a = sum (-1)^k a^k / (k+1)!
    d = [Fraction((-1) ** k, factorial(k + 1)) for k in range(n + 1)]
    inv = [Fraction(1)]
    for k in range(1, n + 1):
        inv.append(-sum(d[i] * inv[k - i] for i in range(1, k + 1)))
    return tuple(inv)


@lru_cache(maxsize=None)
def hirzebruch_series(n: int, normalized: bool = False) -> tuple[YRational, ...]:
    """Un-normalized ``a(1 + y e^(-a))/(1 - e^(-a))``, or its rescaling
    ``Q(a(1+y))/(1+y)`` when ``normalized``."""
    td = todd_series(n)
    # a e^(-a)/(1 - e^(-a)) is the Todd series at -a
    raw = [YRational(LaurentPolynomial({0: t, 1: t * (-1) ** k})) for k, t in enumerate(td)]
    if not normalized:
        return tuple(raw)
    return tuple(YRational(q.numerator * _ONE_PLUS_Y ** k, 1) for k, q in enumerate(raw))


@lru_cache(maxsize=None)
def lambda_series(n: int) -> tuple[YRational, ...]:
    """``1 + y e^a``: one Chern root's contribution to ``ch(lambda_y)``."""
    return tuple(YRational(LaurentPolynomial({0: 1 if k == 0 else 0, 1: Fraction(1, factorial(k))}))
                 for k in range(n + 1))


def series_from_expression(coefs: Sequence) -> tuple[YRational, ...]:
    """Accept plain numbers, y-polynomials or YRationals as series coefficients."""
    return tuple(YRational.coerce(c) for c in coefs)


def _unit_inverse(q0: YRational) -> YRational:
    """Inverse of ``c (1+y)^m``; anything else is not a unit."""
    num = q0.numerator
    if num.is_zero():
        raise ValidationError("series has zero constant term")
    m = 0
    while num.degree and num(-1) == 0:
        num = num.div_one_plus_y()
        m += 1
    if num.degree != 0 or num.low_degree != 0:
        raise ValidationError(f"constant term {q0} is not a unit (c * (1+y)^k)")
    c = num.coeff(0)
    return YRational(LaurentPolynomial.constant(Fraction(1) / c) * _ONE_PLUS_Y ** q0.den_power, m)


def _log_unit_series(r: Sequence[YRational], n: int) -> list[YRational]:
    """``log(r)`` for ``r[0] == 1``."""
    x = [YRational(0)] + list(r[1: n + 1])
    out = [YRational(0)] * (n + 1)
    power = [YRational(1)] + [YRational(0)] * n
    for m in range(1, n + 1):
        power = _smul(power, x, n)
        coef = Fraction((-1) ** (m + 1), m)
        for k in range(n + 1):
            if power[k]:
                out[k] = out[k] + power[k] * coef
    return out


def power_sums(E: Bundle, n: int | None = None) -> list[ClassPolynomial]:
    """``p_0 = rank, p_1, ..., p_n`` of the Chern roots (Newton's identities)."""
    n = E.ring.top_degree if n is None else n
    p = [E.ring.one() * E.rank]
    for k in range(1, n + 1):
        acc = E.c(k) * ((-1) ** (k - 1) * k)
        for i in range(1, k):
            ci = E.c(i)
            if not ci.is_zero():
                acc = acc + ci * p[k - i] * (-1) ** (i - 1)
        p.append(acc)
    return p


def genus_from_series(Q: Sequence, E: Bundle) -> ClassPolynomial:
    """``prod_j Q(a_j)`` over the Chern roots of ``E``, truncated at top degree.

    The constant term must be a unit of Q[y, (1+y)^-1].
    """
    ring = E.ring
    n = ring.top_degree
    Q = list(series_from_expression(Q)) + [YRational(0)] * (n + 1)
    q0 = Q[0]
    inv = _unit_inverse(q0)
    r = [q * inv for q in Q[: n + 1]]
    logr = _log_unit_series(r, n)
    p = power_sums(E, n)
    L = ring.zero()
    for k in range(1, n + 1):
        if logr[k]:
            L = L + p[k] * logr[k]
    total = ring.one()
    term = ring.one()
    for m in range(1, n + 1):
        term = term * L / m
        if term.is_zero():
            break
        total = total + term
    return total * q0 ** E.rank


def chern_character(E: Bundle, scale=None) -> ClassPolynomial:
    """``rank + sum_k p_k / k!``; with ``scale`` the roots are multiplied by it
    (``scale = 1 + y`` gives the modified character ``ch_(1+y)``)."""
    p = power_sums(E)
    out = E.ring.one() * E.rank
    s = None if scale is None else YRational.coerce(scale)
    for k in range(1, len(p)):
        if p[k].is_zero():
            continue
        term = p[k] / factorial(k)
        if s is not None:
            term = term * s ** k
        out = out + term
    return out


def todd_class(E: Bundle) -> ClassPolynomial:
    return genus_from_series(todd_series(E.ring.top_degree), E)


def lambda_y_class(E: Bundle) -> ClassPolynomial:
    """``ch(sum_p Lambda^p E y^p) = prod_j (1 + y e^(b_j))``."""
    return genus_from_series(lambda_series(E.ring.top_degree), E)


def hirzebruch_class(E: Bundle, normalized: bool = False, check: bool = False) -> ClassPolynomial:
    """Un-normalized ``T~_y(E)`` or normalized ``T_y(E)``.

    With ``check`` the un-normalized class is compared against
    ``td(E) * ch(lambda_y(E^*))``.
    """
    T = genus_from_series(hirzebruch_series(E.ring.top_degree, normalized), E)
    if check and not normalized:
        if T != todd_class(E) * lambda_y_class(E.dual()):
            raise InconsistencyError("Hirzebruch class does not factor as td * ch(lambda_y(dual))")
    return T
