"""Dimension tables of mixed Hodge structures and their genera.

A class in the Grothendieck group of mixed Hodge structures is entered as a
table ``(i, p, q) -> dim`` where ``i`` is the cohomological degree and
``(p, q)`` the Hodge type of ``Gr^p_F Gr^W_{p+q}``.  The alternating sign over
``i`` is applied by the genus functions, never stored.

When only the Hodge filtration is known, ``q`` may be left as ``None``;
such tables still have a chi_y genus but no E-polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import ValidationError
from .polycore import EPolynomial, GenusPolynomial

__all__ = [
    "MixedHodgeComplex",
    "PureHodgeStructure",
    "chi_y_of_complex",
    "e_polynomial_of_complex",
    "poincare_dual",
    "specialize_genus",
]

Key = tuple[int, int, "int | None"]


def _key(k) -> Key:
    if len(k) == 2:
        i, p = k
        q = None
    elif len(k) == 3:
        i, p, q = k
    else:
        raise ValidationError(f"table key must be (i, p) or (i, p, q), got {k!r}")
    if q is not None:
        q = int(q)
    return int(i), int(p), q


@dataclass(frozen=True)
class MixedHodgeComplex:
    """Finitely supported table ``(i, p, q) -> dim`` with ``dim >= 0``."""

    entries: Mapping[Key, int] = field(default_factory=dict)
    label: str | None = None

    def __post_init__(self):
        clean: dict[Key, int] = {}
        for k, d in dict(self.entries).items():
            key = _key(k)
            if isinstance(d, bool) or not isinstance(d, int):
                raise ValidationError(f"dimension at {key} must be an integer, got {d!r}")
            if d < 0:
                raise ValidationError(f"negative dimension {d} at {key}")
            if d:
                clean[key] = clean.get(key, 0) + d
        ordered = dict(sorted(clean.items(), key=lambda kv: (kv[0][0], kv[0][1], -1 if kv[0][2] is None else kv[0][2])))
        object.__setattr__(self, "entries", ordered)

    @property
    def degrees(self) -> set[int]:
        return {i for i, _, _ in self.entries}

    def has_weight_data(self) -> bool:
        return all(q is not None for _, _, q in self.entries)

    def is_empty(self) -> bool:
        return not self.entries

    def total_dimension(self) -> int:
        return sum(self.entries.values())

    def __add__(self, other: "MixedHodgeComplex") -> "MixedHodgeComplex":
        """Entrywise sum, i.e. the direct sum of complexes."""
        if not isinstance(other, MixedHodgeComplex):
            return NotImplemented
        out = dict(self.entries)
        for k, d in other.entries.items():
            out[k] = out.get(k, 0) + d
        return MixedHodgeComplex(out)

    def shifted(self, k: int) -> "MixedHodgeComplex":
        """The table of ``K[k]``: degree ``i`` moves to ``i - k``."""
        return MixedHodgeComplex({(i - k, p, q): d for (i, p, q), d in self.entries.items()}, self.label)

    def restricted(self, degree: int) -> "MixedHodgeComplex":
        return MixedHodgeComplex({key: d for key, d in self.entries.items() if key[0] == degree})

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "entries": [{"i": i, "p": p, "q": q, "dim": str(d)} for (i, p, q), d in self.entries.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MixedHodgeComplex":
        return cls({(e["i"], e["p"], e.get("q")): int(e["dim"]) for e in data["entries"]}, data.get("label"))


@dataclass(frozen=True)
class PureHodgeStructure:
    """Pure Hodge structure of a given weight, as Hodge numbers ``h^{p,q}``."""

    weight: int
    hpq: Mapping[tuple[int, int], int]
    polarized_real: bool = False

    def __post_init__(self):
        hpq = {(int(p), int(q)): int(d) for (p, q), d in dict(self.hpq).items() if d}
        for (p, q), d in hpq.items():
            if p + q != self.weight:
                raise ValidationError(f"h^{{{p},{q}}} does not have weight {self.weight}")
            if d < 0:
                raise ValidationError(f"negative Hodge number h^{{{p},{q}}} = {d}")
        if self.polarized_real:
            for (p, q), d in hpq.items():
                if hpq.get((q, p), 0) != d:
                    raise ValidationError(f"Hodge symmetry fails: h^{{{p},{q}}} != h^{{{q},{p}}}")
        object.__setattr__(self, "hpq", dict(sorted(hpq.items())))

    def as_complex(self, degree: int = 0) -> MixedHodgeComplex:
        return MixedHodgeComplex({(degree, p, q): d for (p, q), d in self.hpq.items()})

    def chi_y(self) -> GenusPolynomial:
        return chi_y_of_complex(self.as_complex())


def chi_y_of_complex(K: MixedHodgeComplex) -> GenusPolynomial:
    """``sum_{i,p} (-1)^i dim Gr^p_F H^i * (-y)^p``."""
    out: dict[int, int] = {}
    for (i, p, _q), d in K.entries.items():
        sign = -1 if (i + p) % 2 else 1
        out[p] = out.get(p, 0) + sign * d
    return GenusPolynomial(out)


def e_polynomial_of_complex(K: MixedHodgeComplex) -> EPolynomial:
    """Coefficient of ``u^k v^l`` is ``sum_i (-1)^i dim(i, k, l)``.

    Raises :class:`ValidationError` when an entry lacks its ``q`` index.
    """
    out: dict[tuple[int, int], int] = {}
    for (i, p, q), d in K.entries.items():
        if q is None:
            raise ValidationError(f"entry (i={i}, p={p}) has no weight index; E-polynomial undefined")
        out[(p, q)] = out.get((p, q), 0) + (-d if i % 2 else d)
    return EPolynomial(out)


def poincare_dual(P: GenusPolynomial, n: int) -> GenusPolynomial:
    """``(-y)^n * P(1/y)``: swaps chi_y and chi_y^c of a smooth n-fold."""
    sign = -1 if n % 2 else 1
    return sign * P.substitute_inverse().shift(n)


_SPECIAL_VALUES = {"euler": -1, "arithmetic": 0, "signature": 1}


def specialize_genus(P: GenusPolynomial, at: str | int) -> int:
    """Evaluate at ``y = -1`` (Euler), ``0`` (arithmetic genus) or ``1`` (signature)."""
    value = _SPECIAL_VALUES.get(at, at) if isinstance(at, str) else at
    if value not in (-1, 0, 1):
        raise ValueError(f"unknown specialization {at!r}")
    if value == 0 and not P.is_polynomial():
        raise ZeroDivisionError("y = 0 is a pole of a Laurent polynomial with negative exponents")
    return P(value)
