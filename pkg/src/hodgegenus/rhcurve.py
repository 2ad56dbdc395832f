"""Riemann-Hurwitz type formula for chi_y of a projective map onto a curve.

``f: X -> C`` with ``X`` smooth of dimension ``n+1``.  Away from the critical
values the map is a fibration with fibre ``X_t``; each critical value ``c``
subtracts the genus of the vanishing-cycle cohomology of ``X_c``:

    chi_y^c(X) = chi_y^c(C) chi_y(X_t) - sum_c chi_y[H(X_c; phi)]

A critical value can be described three ways (see :class:`Vanishing`,
:class:`Isolated`, :class:`Stratified`); all reduce to a genus polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import MonodromyError, UnsoundOperationError, ValidationError, VanishingSupportError
from .hodgestruct import MixedHodgeComplex, chi_y_of_complex
from .polycore import GenusPolynomial

__all__ = [
    "Vanishing",
    "Isolated",
    "MilnorStratum",
    "Stratified",
    "CriticalValue",
    "CurveFibration",
    "validate_vanishing_support",
    "vanishing_genus",
    "special_fiber_chi",
    "rh_total_chi_c",
    "rh_total_e_polynomial",
    "isolated_as_vanishing",
    "classical_euler_count",
]


@dataclass(frozen=True)
class Vanishing:
    """Table of ``H^j(X_c; phi)`` for all ``j``; ``sing_dim`` is dim Sing(X_c)."""

    table: MixedHodgeComplex
    sing_dim: int


@dataclass(frozen=True)
class Isolated:
    """One table of reduced ``H^n(M_x)`` per isolated singular point."""

    points: tuple[MixedHodgeComplex, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))


@dataclass(frozen=True)
class MilnorStratum:
    open_genus_c: GenusPolynomial
    milnor: MixedHodgeComplex

    def __post_init__(self):
        object.__setattr__(self, "open_genus_c", GenusPolynomial.coerce(self.open_genus_c))


@dataclass(frozen=True)
class Stratified:
    """Strata of Sing(X_c) with reduced Milnor-fibre cohomology tables."""

    strata: tuple[MilnorStratum, ...]

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple(self.strata))


CriticalValue = Union[Vanishing, Isolated, Stratified]


@dataclass(frozen=True)
class CurveFibration:
    base_genus_c: GenusPolynomial
    generic_fiber: GenusPolynomial
    total_dim: int
    critical: tuple[CriticalValue, ...] = ()

    def __post_init__(self):
        if self.total_dim < 1:
            raise ValidationError("total_dim must be >= 1")
        object.__setattr__(self, "base_genus_c", GenusPolynomial.coerce(self.base_genus_c))
        object.__setattr__(self, "generic_fiber", GenusPolynomial.coerce(self.generic_fiber))
        object.__setattr__(self, "critical", tuple(self.critical))

    @property
    def fiber_dim(self) -> int:
        return self.total_dim - 1


def validate_vanishing_support(table: MixedHodgeComplex, n: int, s: int) -> dict:
    """Check that all degrees of ``table`` lie in ``[n - s, n + s]``.

    Returns a report dict on success, raises :class:`VanishingSupportError`
    naming every offending ``(j, n, s)`` otherwise.
    """
    if s < 0:
        raise ValidationError(f"singular-locus dimension must be >= 0, got {s}")
    bad = sorted(j for j in table.degrees if not n - s <= j <= n + s)
    if bad:
        raise VanishingSupportError(
            f"vanishing cohomology in degrees {bad} outside [{n - s}, {n + s}] (n={n}, s={s})",
            [(j, n, s) for j in bad],
        )
    return {"ok": True, "n": n, "s": s, "range": (n - s, n + s), "degrees": sorted(table.degrees)}


def isolated_as_vanishing(cv: Isolated, n: int) -> Vanishing:
    """Merge isolated point tables into one degree-``n`` vanishing table."""
    total = MixedHodgeComplex()
    for t in cv.points:
        if t.degrees - {n}:
            raise VanishingSupportError(
                f"isolated Milnor table must sit in degree {n}, found {sorted(t.degrees)}",
                [(j, n, 0) for j in sorted(t.degrees - {n})],
            )
        total = total + t
    return Vanishing(total, 0)


def vanishing_genus(cv: CriticalValue, n: int) -> GenusPolynomial:
    """``chi_y[H(X_c; phi)]`` for a critical value of a map with fibre dimension ``n``."""
    if isinstance(cv, Vanishing):
        validate_vanishing_support(cv.table, n, cv.sing_dim)
        return chi_y_of_complex(cv.table)
    if isinstance(cv, Isolated):
        # chi_y[H^n(M_x)] as a single MHS is (-1)^n times the complex genus;
        # with the (-1)^(n+1) prefactor the contribution is -chi_y_of_complex
        isolated_as_vanishing(cv, n)
        total = GenusPolynomial()
        sign = -1 if n % 2 else 1
        for t in cv.points:
            total = total + sign * chi_y_of_complex(t)
        return -((-1) ** (n + 1)) * total
    if isinstance(cv, Stratified):
        total = GenusPolynomial()
        for s in cv.strata:
            total = total + s.open_genus_c * chi_y_of_complex(s.milnor)
        return total
    raise TypeError(f"not a critical value: {cv!r}")


def special_fiber_chi(cv: CriticalValue, generic_fiber: GenusPolynomial, n: int | None = None) -> GenusPolynomial:
    """chi_y of the singular fibre: ``chi_y(X_t) - chi_y[H(X_c; phi)]``.

    ``n`` (fibre dimension) is needed for the support check and for isolated
    data; for a :class:`Vanishing` table it defaults to the table's centre.
    """
    if n is None:
        if not isinstance(cv, Vanishing):
            raise ValidationError("fibre dimension n is required for this critical value")
        degs = sorted(cv.table.degrees)
        n = (degs[0] + degs[-1]) // 2 if degs else 0
    return GenusPolynomial.coerce(generic_fiber) - vanishing_genus(cv, n)


def rh_total_chi_c(f: CurveFibration, assume_trivial_monodromy: bool = False) -> GenusPolynomial:
    """chi_y^c of the total space.

    The action of pi_1(C*) on the generic fibre cohomology must be trivial;
    the caller attests this with ``assume_trivial_monodromy``.
    """
    if not assume_trivial_monodromy:
        raise MonodromyError("Riemann-Hurwitz formula needs attested trivial monodromy on the generic fibres")
    total = f.base_genus_c * f.generic_fiber
    for cv in f.critical:
        total = total - vanishing_genus(cv, f.fiber_dim)
    return total


def rh_total_e_polynomial(f: CurveFibration, *args, **kwargs):
    """Always refused: the limit mixed Hodge structure changes weights, so the
    E-polynomial analogue of the formula is false."""
    raise UnsoundOperationError("no E-polynomial Riemann-Hurwitz formula: weights of the limit MHS differ")


def classical_euler_count(base_euler: int, fiber_euler: int, milnor_numbers: Sequence[int], n: int) -> int:
    """``chi(C) chi(X_t) + (-1)^(n+1) sum mu_x`` for isolated singularities."""
    return base_euler * fiber_euler + (-1) ** (n + 1) * sum(milnor_numbers)
