"""Cohomology classes with polynomial dependence on ``y``, and vector bundles."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import InconsistencyError, ValidationError
from ..polycore import GenusPolynomial, LaurentPolynomial, YRational
from .rings import CohomRing

__all__ = ["ClassPolynomial", "Bundle", "HodgeBundleCollection", "to_genus"]


class ClassPolynomial:
    """``(1+y)^(-den) * sum_{e, i} c[e, i] y^e b_i`` over a :class:`CohomRing`.

    Keys of ``terms`` are ``(y_exponent, basis_index)``.  Construction cancels
    common ``(1+y)`` factors, so ``den`` is minimal.  A class without ``y``
    is simply a ring element.
    """

    __slots__ = ("ring", "terms", "den")

    def __init__(self, ring: CohomRing, terms: Mapping[tuple[int, int], object], den: int = 0):
        self.ring = ring
        clean = {}
        for (e, i), c in terms.items():
            c = Fraction(c)
            if c:
                clean[(e, i)] = c
        while den and clean and _vanishes_at_minus_one(clean):
            clean = _divide_one_plus_y(clean)
            den -= 1
        self.terms = clean
        self.den = den if clean else 0

    # -- views ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def y_degree(self) -> int:
        return max((e for e, _ in self.terms), default=0)

    def y_coefficient(self, e: int) -> "ClassPolynomial":
        """Ring element multiplying ``y^e`` (requires ``den == 0``)."""
        self._require_polynomial()
        return ClassPolynomial(self.ring, {(0, i): c for (ee, i), c in self.terms.items() if ee == e})

    def y_coefficients(self) -> dict[int, "ClassPolynomial"]:
        return {e: self.y_coefficient(e) for e in sorted({e for e, _ in self.terms})}

    def degree_part(self, d: int) -> "ClassPolynomial":
        deg = self.ring.degrees
        return ClassPolynomial(self.ring, {k: c for k, c in self.terms.items() if deg[k[1]] == d}, self.den)

    def is_homogeneous(self, d: int) -> bool:
        return all(self.ring.degrees[i] == d for _, i in self.terms)

    def has_y(self) -> bool:
        return self.den > 0 or any(e for e, _ in self.terms)

    def coefficient(self, label_or_idx, y_exp: int = 0) -> Fraction:
        i = label_or_idx if isinstance(label_or_idx, int) else self.ring.index(label_or_idx)
        return self.terms.get((y_exp, i), Fraction(0))

    def basis_coefficient(self, label_or_idx) -> YRational:
        """The ``y``-dependent coefficient of one basis element."""
        i = label_or_idx if isinstance(label_or_idx, int) else self.ring.index(label_or_idx)
        num = LaurentPolynomial({e: c for (e, j), c in self.terms.items() if j == i})
        return YRational(num, self.den)

    def vector(self) -> dict[int, Fraction]:
        """Coefficient vector of a ``y``-free class."""
        if self.has_y():
            raise ValueError("class depends on y")
        return {i: c for (_, i), c in self.terms.items()}

    def _require_polynomial(self):
        if self.den:
            raise InconsistencyError(f"class still carries a (1+y)^{self.den} denominator")

    # -- arithmetic -----------------------------------------------------
    def _lift(self, other) -> "ClassPolynomial | None":
        if isinstance(other, ClassPolynomial):
            if other.ring != self.ring:
                raise ValidationError("classes live in different rings")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ClassPolynomial(self.ring, {(0, 0): other})
        if isinstance(other, LaurentPolynomial):
            if not other.is_polynomial():
                raise ValidationError("negative powers of y are not allowed in classes")
            return ClassPolynomial(self.ring, {(e, 0): c for e, c in other.items()})
        if isinstance(other, YRational):
            return ClassPolynomial(self.ring, {(e, 0): c for e, c in other.numerator.items()}, other.den_power)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        d = max(self.den, o.den)
        out = dict(_times_one_plus_y(self.terms, d - self.den))
        for k, c in _times_one_plus_y(o.terms, d - o.den).items():
            out[k] = out.get(k, 0) + c
        return ClassPolynomial(self.ring, out, d)

    __radd__ = __add__

    def __neg__(self):
        return ClassPolynomial(self.ring, {k: -c for k, c in self.terms.items()}, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        mul = self.ring.mul_basis
        out: dict[tuple[int, int], Fraction] = {}
        for (e1, i), a in self.terms.items():
            for (e2, j), b in o.terms.items():
                ab = a * b
                for k, s in mul(i, j):
                    key = (e1 + e2, k)
                    out[key] = out.get(key, 0) + ab * s
        return ClassPolynomial(self.ring, out, self.den + o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ClassPolynomial(self.ring, {k: c / other for k, c in self.terms.items()}, self.den)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except ValidationError:
            return False
        if o is None:
            return NotImplemented
        return self.terms == o.terms and self.den == o.den

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items())), self.den))

    def scale_degrees(self, factor) -> "ClassPolynomial":
        """Multiply the degree-``k`` part by ``factor**k``."""
        out = self.ring.zero()
        for d in sorted({self.ring.degrees[i] for _, i in self.terms}):
            out = out + self.degree_part(d) * (YRational.coerce(factor) ** d if d else 1)
        return out

    def evaluate_y(self, value) -> "ClassPolynomial":
        """Substitute a rational number for ``y``."""
        value = Fraction(value)
        if self.den and value == -1:
            raise ZeroDivisionError("pole at y = -1")
        scale = 1 / (1 + value) ** self.den if self.den else Fraction(1)
        out: dict[tuple[int, int], Fraction] = {}
        for (e, i), c in self.terms.items():
            out[(0, i)] = out.get((0, i), 0) + c * value ** e * scale
        return ClassPolynomial(self.ring, out)

    def integrate(self) -> YRational:
        """Apply the ring's integration functional coefficientwise in ``y``."""
        integral = self.ring.integral
        num: dict[int, Fraction] = {}
        for (e, i), c in self.terms.items():
            if i in integral:
                num[e] = num.get(e, 0) + c * integral[i]
        return YRational(LaurentPolynomial(num), self.den)

    # -- rendering ------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted({e for e, _ in self.terms}):
            elems = {i: c for (ee, i), c in self.terms.items() if ee == e}
            inner = _render_vec(self.ring, elems)
            ymono = "" if e == 0 else ("y" if e == 1 else f"y^{e}")
            if not ymono:
                parts.append(f"({inner})" if len(elems) > 1 else inner)
            else:
                parts.append(f"({inner})*{ymono}")
        body = " + ".join(parts)
        if self.den:
            body = f"[{body}]/(1 + y)" + (f"^{self.den}" if self.den > 1 else "")
        return body

    def __repr__(self):
        return f"ClassPolynomial({self})"

    def to_json(self) -> dict:
        return {
            "den_one_plus_y": self.den,
            "terms": [
                {"y_exp": e, "monomial": self.ring.labels[i], "coef": _fmt(c)}
                for (e, i), c in sorted(self.terms.items())
            ],
        }


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _render_vec(ring: CohomRing, vec: Mapping[int, Fraction]) -> str:
    out = []
    for i in sorted(vec, key=lambda i: (ring.degrees[i], i)):
        c = vec[i]
        lab = ring.labels[i]
        neg = c < 0
        a = -c if neg else c
        body = _fmt(a) if lab == "1" else (lab if a == 1 else f"{_fmt(a)}*{lab}")
        out.append((" - " if out else "-") + body if neg else (" + " if out else "") + body)
    return "".join(out)


def _by_index(terms):
    per: dict[int, dict[int, Fraction]] = {}
    for (e, i), c in terms.items():
        per.setdefault(i, {})[e] = c
    return per


def _vanishes_at_minus_one(terms) -> bool:
    for poly in _by_index(terms).values():
        if sum(c * (-1) ** e for e, c in poly.items()) != 0:
            return False
    return True


def _divide_one_plus_y(terms):
    out = {}
    for i, poly in _by_index(terms).items():
        q = LaurentPolynomial(poly).div_one_plus_y()
        for e, c in q.items():
            out[(e, i)] = Fraction(c)
    return out


def _times_one_plus_y(terms, k: int):
    for _ in range(k):
        out: dict[tuple[int, int], Fraction] = {}
        for (e, i), c in terms.items():
            out[(e, i)] = out.get((e, i), 0) + c
            out[(e + 1, i)] = out.get((e + 1, i), 0) + c
        terms = out
    return terms


def to_genus(value: YRational) -> GenusPolynomial:
    """Convert an integrated class to a genus, insisting on integrality."""
    value = YRational.coerce(value)
    if value.den_power:
        raise InconsistencyError(f"residual (1+y)^{value.den_power} denominator in {value}")
    num = value.numerator
    if not num.is_integral():
        raise InconsistencyError(f"non-integral genus {num}")
    return GenusPolynomial(num.terms)


@dataclass(frozen=True, eq=False)
class Bundle:
    """A vector bundle as ``(rank, c_1, ..., c_k)``; ``c_i`` homogeneous of degree ``i``."""

    ring: CohomRing
    rank: int
    chern: tuple[ClassPolynomial, ...] = ()
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.rank < 0:
            raise ValidationError("rank must be nonnegative")
        chern = []
        for i, c in enumerate(self.chern, start=1):
            if isinstance(c, (int, Fraction)) and c == 0:
                c = self.ring.zero()
            if not isinstance(c, ClassPolynomial) or c.ring != self.ring:
                raise ValidationError(f"c_{i} must be a class in the bundle's ring")
            if c.has_y():
                raise ValidationError(f"c_{i} must not depend on y")
            if not c.is_homogeneous(i):
                raise ValidationError(f"c_{i} is not homogeneous of degree {i}")
            if i > self.rank and not c.is_zero():
                raise ValidationError(f"c_{i} must vanish above the rank {self.rank}")
            chern.append(c)
        while chern and chern[-1].is_zero():
            chern.pop()
        object.__setattr__(self, "chern", tuple(chern))

    # -- constructors ---------------------------------------------------
    @classmethod
    def trivial(cls, ring: CohomRing, rank: int, name: str | None = None) -> "Bundle":
        return cls(ring, rank, (), name)

    @classmethod
    def line(cls, ring: CohomRing, c1: ClassPolynomial, name: str | None = None) -> "Bundle":
        return cls(ring, 1, (c1,), name)

    @classmethod
    def from_total_chern(cls, ring: CohomRing, rank: int, total: ClassPolynomial, name: str | None = None) -> "Bundle":
        if total.degree_part(0) != ring.one():
            raise ValidationError("total Chern class must start with 1")
        return cls(ring, rank, tuple(total.degree_part(i) for i in range(1, ring.top_degree + 1)), name)

    # -- accessors ------------------------------------------------------
    def c(self, i: int) -> ClassPolynomial:
        if i == 0:
            return self.ring.one()
        if 1 <= i <= len(self.chern):
            return self.chern[i - 1]
        return self.ring.zero()

    def chern_vec(self, i: int) -> dict[int, Fraction]:
        return self.c(i).vector()

    def total_chern(self) -> ClassPolynomial:
        out = self.ring.one()
        for c in self.chern:
            out = out + c
        return out

    def is_flat(self) -> bool:
        """No Chern classes in positive degree."""
        return not self.chern

    def dual(self) -> "Bundle":
        return Bundle(self.ring, self.rank, tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.chern, 1)),
                      f"{self.name}^*" if self.name else None)

    def __add__(self, other: "Bundle") -> "Bundle":
        """Whitney sum."""
        if not isinstance(other, Bundle):
            return NotImplemented
        if other.ring != self.ring:
            raise ValidationError("bundles over different rings")
        total = self.total_chern() * other.total_chern()
        return Bundle.from_total_chern(self.ring, self.rank + other.rank, total)

    def twist(self, line: "Bundle") -> "Bundle":
        """``E (x) L`` for a line bundle ``L``: ``c(E(x)L) = sum c_i(E)(1+l)^(r-i)``."""
        if line.rank != 1:
            raise ValidationError("twist needs a line bundle")
        one_l = self.ring.one() + line.c(1)
        total = self.ring.zero()
        for i in range(self.rank + 1):
            total = total + self.c(i) * one_l ** (self.rank - i)
        return Bundle.from_total_chern(self.ring, self.rank, total)

    def pullback(self, mapping) -> "Bundle":
        """Bundle with every Chern class sent through ``mapping`` (a ring map)."""
        chern = tuple(mapping(c) for c in self.chern)
        target = chern[0].ring if chern else None
        if target is None:
            raise ValidationError("use Bundle.trivial on the target ring for flat bundles")
        return Bundle(target, self.rank, chern, self.name)

    def __repr__(self):
        cs = ", ".join(f"c{i}={c}" for i, c in enumerate(self.chern, 1))
        return f"Bundle(rank={self.rank}{', ' + cs if cs else ''})"


@dataclass(frozen=True)
class HodgeBundleCollection:
    """Family of bundles ``{(a, b) -> H^{a,b}}`` over one ring.

    The meaning of the index pair depends on the formula using it: Hodge type
    ``(p, q)``, or ``(p, i)`` for ``Gr^p_F`` of the ``i``-th cohomology.
    """

    entries: Mapping[tuple[int, int], Bundle]

    def __post_init__(self):
        entries = {(int(a), int(b)): E for (a, b), E in dict(self.entries).items()}
        rings = {id(E.ring): E.ring for E in entries.values()}
        first = next(iter(rings.values()), None)
        if any(R != first for R in rings.values()):
            raise ValidationError("all Hodge bundles must live on the same ring")
        object.__setattr__(self, "entries", dict(sorted(entries.items())))

    @property
    def ring(self) -> CohomRing | None:
        return next(iter(self.entries.values())).ring if self.entries else None

    @classmethod
    def trivial(cls, ring: CohomRing, ranks: Mapping[tuple[int, int], int]) -> "HodgeBundleCollection":
        return cls({k: Bundle.trivial(ring, r) for k, r in ranks.items() if r})

    def items(self) -> Iterable[tuple[tuple[int, int], Bundle]]:
        return self.entries.items()

    def is_flat(self) -> bool:
        return all(E.is_flat() for E in self.entries.values())

    def rank_polynomial(self, mode: str = "pq") -> GenusPolynomial:
        """Degree-0 part of ``ch(chi_y(f))``: the fibre genus built from ranks."""
        out = GenusPolynomial()
        y = GenusPolynomial.y()
        for (a, b), E in self.entries.items():
            if mode == "pq":
                out = out + (-1) ** b * E.rank * y ** a
            elif mode == "graded":
                out = out + (-1) ** b * E.rank * (-y) ** a
            elif mode == "p":
                out = out + E.rank * (-y) ** a
            else:
                raise ValueError(f"unknown mode {mode!r}")
        return out
