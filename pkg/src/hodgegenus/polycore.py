"""Exact polynomial arithmetic used throughout the package.

Three value types live here:

* :class:`LaurentPolynomial` / :class:`GenusPolynomial` -- sparse Laurent
  polynomials in ``y`` (rational resp. integer coefficients).
* :class:`EPolynomial` -- sparse integer polynomials in ``u, v``.
* :class:`YRational` -- a polynomial in ``y`` divided by a power of ``(1+y)``.

All values are immutable and hashable.  Coefficients are Python ints or
:class:`fractions.Fraction`, so nothing ever overflows or rounds.

>>> y = GenusPolynomial.y()
>>> print((1 - y) * (1 - y))
1 - 2*y + y^2
"""
from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

__all__ = [
    "LaurentPolynomial",
    "GenusPolynomial",
    "EPolynomial",
    "YRational",
    "poly_arith",
    "specialize_e",
]


def _norm(c) -> int | Fraction:
    """Return ``c`` as an int when it is integral, else as a Fraction."""
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"inexact coefficient {c!r}")


def _fmt_coef(c) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _render(items, monomial) -> str:
    """Render ``(key, coef)`` pairs as ``a + b*m - c*m2``."""
    out = []
    for key, c in items:
        mono = monomial(key)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = _fmt_coef(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coef(a)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


class LaurentPolynomial:
    """Sparse Laurent polynomial in one variable with rational coefficients.

    The canonical form drops zero coefficients, so ``==`` is a coefficient
    comparison.  Integers compare equal to constant polynomials.
    """

    __slots__ = ("_terms", "_hash")
    var = "y"

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError(f"exponent must be int, got {e!r}")
            c = _norm(c)
            if c:
                clean[e] = c
        self._check(clean)
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    def _check(self, terms: dict) -> None:
        pass

    # -- construction ---------------------------------------------------
    @classmethod
    def y(cls):
        return cls({1: 1})

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coef=1):
        return cls({exp: coef})

    @classmethod
    def from_coefficients(cls, coefs: Iterable, start: int = 0):
        """Dense constructor: ``coefs[i]`` is the coefficient of ``y^(start+i)``."""
        return cls({start + i: c for i, c in enumerate(coefs)})

    # -- accessors ------------------------------------------------------
    @property
    def terms(self) -> dict[int, int | Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exp: int):
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    @property
    def low_degree(self) -> int | None:
        return min(self._terms) if self._terms else None

    def is_polynomial(self) -> bool:
        """True when no negative exponent occurs."""
        return not self._terms or min(self._terms) >= 0

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    # -- arithmetic -----------------------------------------------------
    def _wrap(self, other) -> "LaurentPolynomial | None":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return type(self).constant(other) if _is_int(other) else LaurentPolynomial.constant(other)
        return None

    def _result_cls(self, other: "LaurentPolynomial"):
        if isinstance(self, GenusPolynomial) and isinstance(other, GenusPolynomial):
            return GenusPolynomial
        return LaurentPolynomial

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            out[e] = out.get(e, 0) + c
        return self._result_cls(o)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        out: dict[int, int | Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return self._result_cls(o)(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            if isinstance(n, int) and len(self._terms) == 1:
                (e, c), = self._terms.items()
                inv = Fraction(1, 1) / c
                cls = type(self) if abs(c) == 1 else LaurentPolynomial
                return cls({e * n: inv ** (-n)})
            raise ValueError("only monomials can be raised to negative powers")
        result = type(self).constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero polynomial")
            return LaurentPolynomial({e: Fraction(c) / other for e, c in self._terms.items()})
        return NotImplemented

    def shift(self, k: int):
        """Multiply by ``y^k``."""
        return type(self)({e + k: c for e, c in self._terms.items()})

    def substitute_inverse(self):
        """Return ``P(1/y)``."""
        return type(self)({-e: c for e, c in self._terms.items()})

    def substitute_scaled(self, factor):
        """Return ``P(factor*y)`` for a nonzero rational ``factor``."""
        f = Fraction(factor)
        out = LaurentPolynomial({e: c * f ** e for e, c in self._terms.items()})
        return type(self)(out.terms) if out.is_integral() else out

    def __call__(self, value):
        """Exact evaluation at a rational number."""
        total: int | Fraction = 0
        for e, c in self._terms.items():
            total += c * (Fraction(value) ** e if e < 0 else value ** e)
        return _norm(total)

    def div_one_plus_y(self):
        """Exact quotient by ``(1+y)``; raises ``ValueError`` if not divisible."""
        if not self._terms:
            return self
        low = min(self._terms)
        dense = [self._terms.get(e, 0) for e in range(low, max(self._terms) + 1)]
        # synthetic division by (y + 1), highest degree first
        quot = []
        carry = 0
        for c in reversed(dense):
            carry = c - carry
            quot.append(carry)
        if carry != 0:
            raise ValueError("polynomial is not divisible by (1+y)")
        quot = quot[:-1]
        quot.reverse()
        return type(self).from_coefficients(quot, start=low)

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- rendering ------------------------------------------------------
    def to_text(self, var: str | None = None) -> str:
        v = var or self.var

        def mono(e):
            if e == 0:
                return ""
            return v if e == 1 else f"{v}^{e}" if e > 0 else f"{v}^({e})"

        return _render(self._terms.items(), mono)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"{type(self).__name__}({self.to_text()!r})"

    def to_json(self, var: str | None = None) -> dict:
        return {
            "var": var or self.var,
            "terms": [{"exp": e, "coef": _fmt_coef(c)} for e, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping | str):
        if isinstance(data, str):
            data = json.loads(data)
        return cls({int(t["exp"]): Fraction(t["coef"]) for t in data["terms"]})


def _is_int(x) -> bool:
    return isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)


class GenusPolynomial(LaurentPolynomial):
    """Integer Laurent polynomial in ``y``: the value type of chi_y genera."""

    __slots__ = ()

    def _check(self, terms: dict) -> None:
        for e, c in terms.items():
            if not isinstance(c, int):
                raise ValueError(f"GenusPolynomial needs integer coefficients, y^{e} has {c}")

    @classmethod
    def coerce(cls, p) -> "GenusPolynomial":
        """Convert an int or an integral LaurentPolynomial to a GenusPolynomial."""
        if isinstance(p, GenusPolynomial):
            return p
        if isinstance(p, LaurentPolynomial):
            return cls(p.terms)
        if _is_int(p):
            return cls.constant(p)
        raise TypeError(f"cannot read {p!r} as a genus polynomial")


class EPolynomial:
    """Sparse integer polynomial in ``u, v`` (Hodge-Deligne polynomial)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for key, c in (terms or {}).items():
            k, l = key
            c = _norm(c)
            if not isinstance(c, int):
                raise ValueError("E-polynomial coefficients must be integers")
            if c:
                clean[(int(k), int(l))] = c
        self._terms = dict(sorted(clean.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0])))
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> "EPolynomial":
        return cls({(0, 0): c})

    @classmethod
    def uv(cls) -> "EPolynomial":
        return cls({(1, 1): 1})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, k: int, l: int) -> int:
        return self._terms.get((k, l), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def _wrap(self, other):
        if isinstance(other, EPolynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return EPolynomial.constant(other)
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for key, c in o._terms.items():
            out[key] = out.get(key, 0) + c
        return EPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return EPolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (a, b), c1 in self._terms.items():
            for (k, l), c2 in o._terms.items():
                key = (a + k, b + l)
                out[key] = out.get(key, 0) + c1 * c2
        return EPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = EPolynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def evaluate(self, u, v):
        total = 0
        for (k, l), c in self._terms.items():
            total += c * Fraction(u) ** k * Fraction(v) ** l
        return _norm(total)

    def chi_y(self) -> GenusPolynomial:
        """``E(-y, 1)``."""
        out: dict[int, int] = {}
        for (k, _l), c in self._terms.items():
            out[k] = out.get(k, 0) + c * (-1) ** k
        return GenusPolynomial(out)

    def weight(self) -> GenusPolynomial:
        """``E(t, t)`` as a one-variable polynomial."""
        out: dict[int, int] = {}
        for (k, l), c in self._terms.items():
            out[k + l] = out.get(k + l, 0) + c
        return GenusPolynomial(out)

    def euler(self) -> int:
        return sum(self._terms.values())

    def to_text(self) -> str:
        def mono(key):
            k, l = key
            parts = []
            for v, e in (("u", k), ("v", l)):
                if e == 1:
                    parts.append(v)
                elif e:
                    parts.append(f"{v}^{e}" if e > 0 else f"{v}^({e})")
            return "*".join(parts)

        return _render(self._terms.items(), mono)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"EPolynomial({self.to_text()!r})"

    def to_json(self) -> dict:
        return {
            "vars": ["u", "v"],
            "terms": [{"exp": [k, l], "coef": str(c)} for (k, l), c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> "EPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({tuple(t["exp"]): int(t["coef"]) for t in data["terms"]})


_ONE_PLUS_Y = LaurentPolynomial({0: 1, 1: 1})


class YRational:
    """``numerator / (1+y)^den_power`` with ``numerator`` rational in ``y``.

    Construction reduces: common ``(1+y)`` factors are cancelled, so two
    equal values always have identical fields.
    """

    __slots__ = ("numerator", "den_power")

    def __init__(self, numerator=0, den_power: int = 0):
        if den_power < 0:
            raise ValueError("den_power must be nonnegative")
        num = numerator if isinstance(numerator, LaurentPolynomial) else LaurentPolynomial.constant(numerator)
        num = LaurentPolynomial(num.terms)
        if num.is_zero():
            den_power = 0
        while den_power and num(-1) == 0:
            num = num.div_one_plus_y()
            den_power -= 1
        self.numerator = num
        self.den_power = den_power

    @classmethod
    def coerce(cls, x) -> "YRational":
        if isinstance(x, YRational):
            return x
        return cls(x)

    def reduce(self) -> "YRational":
        return YRational(self.numerator, self.den_power)

    def is_polynomial(self) -> bool:
        return self.den_power == 0

    def to_polynomial(self) -> LaurentPolynomial:
        if self.den_power:
            raise ValueError(f"residual (1+y)^{self.den_power} denominator")
        return self.numerator

    def _wrap(self, other):
        if isinstance(other, YRational):
            return other
        if isinstance(other, (int, Fraction, LaurentPolynomial)) and not isinstance(other, bool):
            return YRational(other)
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        d = max(self.den_power, o.den_power)
        a = self.numerator * _ONE_PLUS_Y ** (d - self.den_power)
        b = o.numerator * _ONE_PLUS_Y ** (d - o.den_power)
        return YRational(a + b, d)

    __radd__ = __add__

    def __neg__(self):
        return YRational(-self.numerator, self.den_power)

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return YRational(self.numerator * o.numerator, self.den_power + o.den_power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return YRational(self.numerator / other, self.den_power)
        return NotImplemented

    def __pow__(self, n: int) -> "YRational":
        if n < 0:
            raise ValueError("negative power")
        return YRational(self.numerator ** n, self.den_power * n)

    def divide_one_plus_y(self, k: int = 1) -> "YRational":
        return YRational(self.numerator, self.den_power + k)

    def __call__(self, value):
        if Fraction(value) == -1 and self.den_power:
            raise ZeroDivisionError("pole at y = -1")
        return _norm(Fraction(self.numerator(value)) / (1 + Fraction(value)) ** self.den_power)

    def __eq__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self.numerator == o.numerator and self.den_power == o.den_power

    def __hash__(self):
        return hash((self.numerator, self.den_power))

    def __bool__(self):
        return not self.numerator.is_zero()

    def __str__(self):
        if not self.den_power:
            return str(self.numerator)
        den = "(1 + y)" if self.den_power == 1 else f"(1 + y)^{self.den_power}"
        return f"({self.numerator})/{den}"

    def __repr__(self):
        return f"YRational({str(self)!r})"


def poly_arith(a: GenusPolynomial, b: GenusPolynomial, op: str) -> GenusPolynomial:
    """Apply ``op`` in ``{"add", "sub", "mul"}`` to two genus polynomials."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def specialize_e(e: EPolynomial, at: str) -> GenusPolynomial:
    """Specialize an E-polynomial: ``chi_y`` -> E(-y,1), ``weight`` -> E(t,t),
    ``euler`` -> E(1,1) as a constant polynomial."""
    if at == "chi_y":
        return e.chi_y()
    if at == "weight":
        return e.weight()
    if at == "euler":
        return GenusPolynomial.constant(e.euler())
    raise ValueError(f"unknown specialization {at!r}")
