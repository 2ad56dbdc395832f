"""Classes in the Grothendieck ring of varieties, read through E-polynomials.

A :class:`VarietyClass` is an expression tree over a few named motives.  Its
E-polynomial (of compactly supported cohomology) is computed once at
construction; every genus is a specialization of it.  Two classes with equal
E-polynomials are indistinguishable here, by design.

>>> P2 = proj_space(2)
>>> print(chi_y_c(P2))
1 - y + y^2
>>> print(chi_y_c(torus()))
-1 - y
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ValidationError
from .hodgestruct import poincare_dual
from .polycore import EPolynomial, GenusPolynomial

__all__ = [
    "VarietyClass",
    "point",
    "affine_line",
    "proj_space",
    "torus",
    "atom",
    "chi_y_c",
    "chi_y",
    "e_polynomial",
    "blowup_class",
    "product_genus_check",
]

_UV = EPolynomial.uv()


@dataclass(frozen=True, eq=False)
class VarietyClass:
    """Node of a K_0(Var) expression.

    ``op`` is one of ``"leaf"``, ``"sum"``, ``"diff"``, ``"prod"``.  Leaves
    carry a ``name``; inner nodes carry two ``args``.  ``smooth``/``complete``
    are declarations, not inferences: they gate :func:`chi_y`.
    """

    op: str
    epoly: EPolynomial
    dim: int
    smooth: bool = False
    complete: bool = False
    name: str | None = None
    args: tuple["VarietyClass", ...] = ()

    def __add__(self, other):
        other = _coerce(other)
        smooth = self.smooth and other.smooth and self.dim == other.dim
        return VarietyClass("sum", self.epoly + other.epoly, max(self.dim, other.dim),
                            smooth, self.complete and other.complete, args=(self, other))

    def __radd__(self, other):
        return _coerce(other) + self

    def __sub__(self, other):
        other = _coerce(other)
        return VarietyClass("diff", self.epoly - other.epoly, max(self.dim, other.dim), args=(self, other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return VarietyClass("prod", self.epoly * other.epoly, self.dim + other.dim,
                            self.smooth and other.smooth, self.complete and other.complete,
                            args=(self, other))

    def __rmul__(self, other):
        return _coerce(other) * self

    def __pow__(self, n: int):
        if n < 1:
            raise ValueError("power must be positive")
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def declare(self, *, smooth: bool | None = None, complete: bool | None = None,
                dim: int | None = None, name: str | None = None) -> "VarietyClass":
        """Same class with overridden flags, e.g. ``(L**3 - point()).declare(smooth=True, dim=3)``."""
        return VarietyClass(
            self.op, self.epoly,
            self.dim if dim is None else dim,
            self.smooth if smooth is None else smooth,
            self.complete if complete is None else complete,
            self.name if name is None else name,
            self.args,
        )

    def same_class(self, other: "VarietyClass") -> bool:
        """Equality of E-normal forms (the only equality this module knows)."""
        return self.epoly == _coerce(other).epoly

    def __str__(self):
        if self.op == "leaf":
            return self.name or "?"
        sym = {"sum": " + ", "diff": " - ", "prod": "*"}[self.op]
        a, b = self.args
        left, right = str(a), str(b)
        if self.op == "prod":
            left = f"({left})" if a.op in ("sum", "diff") else left
            right = f"({right})" if b.op in ("sum", "diff") else right
        elif self.op == "diff" and b.op in ("sum", "diff"):
            right = f"({right})"
        return left + sym + right

    def __repr__(self):
        return f"VarietyClass({self}, E={self.epoly})"


def _coerce(x) -> VarietyClass:
    if isinstance(x, VarietyClass):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        # n copies of a point; n = 1 is the point itself
        return VarietyClass("leaf", EPolynomial.constant(x), 0, x >= 0, x >= 0, name=str(x))
    raise TypeError(f"cannot use {x!r} as a variety class")


def point() -> VarietyClass:
    return VarietyClass("leaf", EPolynomial.constant(1), 0, True, True, name="pt")


def affine_line() -> VarietyClass:
    return VarietyClass("leaf", _UV, 1, True, False, name="L")


def proj_space(n: int) -> VarietyClass:
    """``P^n = pt + L + ... + L^n``, smooth and complete."""
    if n < 0:
        raise ValidationError("projective space dimension must be >= 0")
    e = EPolynomial({(k, k): 1 for k in range(n + 1)})
    return VarietyClass("leaf", e, n, True, True, name=f"P{n}")


def torus() -> VarietyClass:
    """``Gm = L - pt``."""
    return VarietyClass("leaf", _UV - 1, 1, True, False, name="Gm")


def atom(name: str, epoly: EPolynomial, dim: int, smooth: bool = False, complete: bool = False) -> VarietyClass:
    """A user-named variety given by its compactly supported E-polynomial."""
    return VarietyClass("leaf", epoly, dim, smooth, complete, name=name)


def e_polynomial(X: VarietyClass) -> EPolynomial:
    return X.epoly


def chi_y_c(X: VarietyClass) -> GenusPolynomial:
    return X.epoly.chi_y()


def chi_y(X: VarietyClass) -> GenusPolynomial:
    """chi_y of a complete class, or of a smooth class of pure dimension.

    Neither flag set means chi_y is not determined by E_c, and the call is
    refused with :class:`ValidationError`.
    """
    if X.complete:
        return chi_y_c(X)
    if X.smooth:
        return poincare_dual(chi_y_c(X), X.dim)
    raise ValidationError(f"chi_y of {X} needs a complete or smooth pure-dimensional class")


def blowup_class(X: VarietyClass, Y: VarietyClass, r: int, *, force: bool = False) -> VarietyClass:
    """Class of the blow-up of ``X`` along a smooth centre ``Y`` of codimension ``r+1``.

    The exceptional divisor is a P^r-bundle over ``Y``, so the result is
    ``X + Y*(P^r - pt)``.  ``force`` skips the smoothness check.
    """
    if r < 0:
        raise ValidationError(f"r must be >= 0, got {r}")
    if not force and not (X.smooth and Y.smooth):
        raise ValidationError("blow-up formula needs smooth X and smooth centre Y")
    if not force and Y.dim + r + 1 != X.dim:
        raise ValidationError(f"centre of dimension {Y.dim} has codimension {X.dim - Y.dim} in X, not r+1 = {r + 1}")
    out = X + Y * (proj_space(r) - point())
    return out.declare(smooth=X.smooth, complete=X.complete, dim=X.dim, name=f"Bl[{Y}]{X}")


class GenusPair(NamedTuple):
    lhs: GenusPolynomial
    rhs: GenusPolynomial

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def product_genus_check(B: VarietyClass, F: VarietyClass) -> GenusPair:
    """``chi_y^c(B x F)`` next to ``chi_y^c(B) * chi_y^c(F)``."""
    return GenusPair(chi_y_c(B * F), chi_y_c(B) * chi_y_c(F))
