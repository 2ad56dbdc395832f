"""Genus of the source of a stratified proper map, by inclusion-exclusion.

Strata of the target are given with the chi_y^c genus of their closure and of
the fibre over them.  From the closures we recover the "hat" genera

    hat(S) = closure(S) - sum_{W < S} hat(W)

and the source genus is

    chi(X) = chi(Y) chi(F) + sum_{S non-generic} hat(S) (chi(F_S) - chi(F)).

The order ``W < S`` is the transitive closure of the ``covers`` relation;
every non-generic stratum lies implicitly below the generic (dense) one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import MonodromyError, StrataCycleError, ValidationError
from .hodgestruct import MixedHodgeComplex, chi_y_of_complex
from .polycore import GenusPolynomial

__all__ = [
    "Stratum",
    "StratifiedMapDescriptor",
    "StalkStratum",
    "StalkSumDescriptor",
    "hat_genus",
    "hat_genera",
    "total_space_chi_c",
    "total_space_chi",
    "additive_stratum_sum",
    "stalk_sum_chi",
    "stratified_report",
]


@dataclass(frozen=True)
class Stratum:
    id: str
    fiber_genus: GenusPolynomial
    closure_genus: GenusPolynomial | None = None
    open_genus: GenusPolynomial | None = None
    covers: frozenset[str] = frozenset()
    monodromy_trivial: bool = False

    def __post_init__(self):
        if self.closure_genus is None and self.open_genus is None:
            raise ValidationError(f"stratum {self.id}: give closure_genus or open_genus")
        object.__setattr__(self, "covers", frozenset(self.covers))
        for name in ("fiber_genus", "closure_genus", "open_genus"):
            val = getattr(self, name)
            if val is not None:
                object.__setattr__(self, name, GenusPolynomial.coerce(val))


@dataclass(frozen=True)
class StratifiedMapDescriptor:
    """Validated strata poset of the target of ``f: X -> Y``.

    ``projective`` records that the genera are chi_y of projective varieties,
    which is what :func:`total_space_chi` requires.
    """

    strata: tuple[Stratum, ...]
    generic_id: str
    projective: bool = False
    _below: Mapping[str, frozenset[str]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        strata = tuple(self.strata)
        object.__setattr__(self, "strata", strata)
        ids = [s.id for s in strata]
        if len(set(ids)) != len(ids):
            raise ValidationError("duplicate stratum ids")
        by_id = {s.id: s for s in strata}
        if self.generic_id not in by_id:
            raise ValidationError(f"generic stratum {self.generic_id!r} is not among the strata")
        for s in strata:
            unknown = s.covers - by_id.keys()
            if unknown:
                raise ValidationError(f"stratum {s.id} covers unknown strata {sorted(unknown)}")
            if self.generic_id in s.covers:
                raise ValidationError(f"generic stratum {self.generic_id} must be maximal, but {s.id} lists it")
        object.__setattr__(self, "_below", _transitive_below(strata, self.generic_id))

    @property
    def by_id(self) -> dict[str, Stratum]:
        return {s.id: s for s in self.strata}

    @property
    def generic(self) -> Stratum:
        return self.by_id[self.generic_id]

    @property
    def generic_fiber(self) -> GenusPolynomial:
        return self.generic.fiber_genus

    def below(self, sid: str) -> frozenset[str]:
        """All strata strictly below ``sid``."""
        return self._below[sid]

    def closure_genus(self, sid: str) -> GenusPolynomial:
        s = self.by_id[sid]
        if s.closure_genus is not None:
            return s.closure_genus
        total = s.open_genus
        for w in self.below(sid):
            ow = self.by_id[w].open_genus
            if ow is None:
                raise ValidationError(f"closure of {sid} unknown: {w} has no open genus")
            total = total + ow
        return total


def _transitive_below(strata: Sequence[Stratum], generic_id: str) -> dict[str, frozenset[str]]:
    covers = {s.id: set(s.covers) for s in strata}
    covers[generic_id] |= {s.id for s in strata if s.id != generic_id}

    below: dict[str, frozenset[str]] = {}
    state: dict[str, int] = {}  # 1 = on stack, 2 = done

    def visit(sid: str, path: list[str]):
        if state.get(sid) == 2:
            return
        if state.get(sid) == 1:
            cycle = path[path.index(sid):] + [sid]
            raise StrataCycleError("cycle in strata order: " + " < ".join(reversed(cycle)))
        state[sid] = 1
        path.append(sid)
        acc: set[str] = set()
        for w in covers[sid]:
            visit(w, path)
            acc.add(w)
            acc |= below[w]
        path.pop()
        state[sid] = 2
        below[sid] = frozenset(acc)

    # non-generic strata first, so a cycle is reported without the implicit generic edges
    for s in sorted(strata, key=lambda s: s.id == generic_id):
        visit(s.id, [])
    return below


def hat_genera(d: StratifiedMapDescriptor) -> dict[str, GenusPolynomial]:
    """hat genus of every stratum, memoized over the poset."""
    memo: dict[str, GenusPolynomial] = {}

    def hat(sid: str) -> GenusPolynomial:
        if sid not in memo:
            val = d.closure_genus(sid)
            for w in d.below(sid):
                val = val - hat(w)
            memo[sid] = val
        return memo[sid]

    for s in d.strata:
        hat(s.id)
    return {s.id: memo[s.id] for s in d.strata}


def hat_genus(d: StratifiedMapDescriptor, sid: str) -> GenusPolynomial:
    if sid not in d.by_id:
        raise ValidationError(f"unknown stratum {sid!r}")
    return hat_genera(d)[sid]


def _check_monodromy(d: StratifiedMapDescriptor, assume: bool) -> None:
    if assume:
        return
    bad = [s.id for s in d.strata if not s.monodromy_trivial]
    if bad:
        raise MonodromyError(
            "strata " + ", ".join(bad) + " are not attested to have trivial monodromy"
        )


def _inclusion_exclusion(d: StratifiedMapDescriptor) -> GenusPolynomial:
    hats = hat_genera(d)
    F = d.generic_fiber
    total = d.closure_genus(d.generic_id) * F
    for s in d.strata:
        if s.id != d.generic_id:
            total = total + hats[s.id] * (s.fiber_genus - F)
    return total


def total_space_chi_c(d: StratifiedMapDescriptor, assume_trivial_monodromy: bool = False) -> GenusPolynomial:
    """chi_y^c of the source from chi_y^c data on the target strata."""
    _check_monodromy(d, assume_trivial_monodromy)
    return _inclusion_exclusion(d)


def total_space_chi(d: StratifiedMapDescriptor, assume_trivial_monodromy: bool = False) -> GenusPolynomial:
    """chi_y of the source; every supplied genus must be chi_y of a projective variety."""
    if not d.projective:
        raise ValidationError("total_space_chi needs a descriptor flagged projective")
    _check_monodromy(d, assume_trivial_monodromy)
    return _inclusion_exclusion(d)


def additive_stratum_sum(d: StratifiedMapDescriptor) -> GenusPolynomial:
    """``sum_S chi(S) chi(F_S)`` over open strata; needs every ``open_genus``."""
    total = GenusPolynomial()
    for s in d.strata:
        if s.open_genus is None:
            raise ValidationError(f"stratum {s.id} has no open genus")
        total = total + s.open_genus * s.fiber_genus
    return total


def stratified_report(d: StratifiedMapDescriptor, assume_trivial_monodromy: bool = False,
                      compact: bool = True) -> dict:
    """Total genus plus per-stratum hat genera, for auditing."""
    total = (total_space_chi_c if compact else total_space_chi)(d, assume_trivial_monodromy)
    return {"total": total, "hat": hat_genera(d)}


@dataclass(frozen=True)
class StalkStratum:
    open_genus_c: GenusPolynomial
    stalk: MixedHodgeComplex
    locally_constant: bool = True

    def __post_init__(self):
        object.__setattr__(self, "open_genus_c", GenusPolynomial.coerce(self.open_genus_c))


@dataclass(frozen=True)
class StalkSumDescriptor:
    strata: tuple[StalkStratum, ...]

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple(self.strata))


def stalk_sum_chi(d: StalkSumDescriptor | Iterable[StalkStratum], assume_constant_sheaves: bool = False) -> GenusPolynomial:
    """``sum_S chi_y^c(S) * chi_y(stalk_S)``: global genus from stalk data.

    Strata flagged ``locally_constant=False`` are refused unless
    ``assume_constant_sheaves`` is set.
    """
    strata = d.strata if isinstance(d, StalkSumDescriptor) else tuple(d)
    if not assume_constant_sheaves:
        bad = [i for i, s in enumerate(strata) if not s.locally_constant]
        if bad:
            raise MonodromyError(f"strata {bad} do not have constant cohomology sheaves")
    total = GenusPolynomial()
    for s in strata:
        total = total + s.open_genus_c * chi_y_of_complex(s.stalk)
    return total
