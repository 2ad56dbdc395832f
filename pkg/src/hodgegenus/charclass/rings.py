"""Finite-dimensional graded cohomology rings with an integration functional.

Rings are stored as a monomial basis with (complex) degrees and a table of
structure constants.  Products of degree above the top degree are zero
because no basis element of that degree exists.

Supported presentations: a point, P^n, finite products, projective bundles
``P(V)`` over any supported ring, and fully custom tables.
"""
from __future__ import annotations

import itertools
import os
from fractions import Fraction
from typing import Mapping, Sequence

from ..errors import ValidationError

__all__ = [
    "CohomRing",
    "point_ring",
    "projective_space",
    "product_ring",
    "projective_bundle",
    "custom_ring",
    "max_degree_cap",
]

Mono = tuple[tuple[str, int], ...]
Vec = dict[int, Fraction]


def max_degree_cap() -> int | None:
    """Resource guard from ``HODGE_MAX_DEGREE``; ``None`` when unset."""
    raw = os.environ.get("HODGE_MAX_DEGREE")
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"HODGE_MAX_DEGREE must be an integer, got {raw!r}") from None


def _render_mono(m: Mono) -> str:
    if not m:
        return "1"
    return "*".join(g if e == 1 else f"{g}^{e}" for g, e in m)


class CohomRing:
    """Graded commutative Q-algebra with basis, structure constants and integral.

    Basis element 0 is the unit.  ``integral`` maps basis indices of top
    degree to their integrals.
    """

    def __init__(self, monos: Sequence[Mono], degrees: Sequence[int],
                 mul: Mapping[tuple[int, int], Mapping[int, Fraction]],
                 integral: Mapping[int, Fraction], gens: Mapping[str, int],
                 kind: str, **meta):
        self.monos = tuple(tuple(m) for m in monos)
        self.degrees = tuple(degrees)
        self.rank = len(self.monos)
        if self.rank == 0 or self.degrees[0] != 0:
            raise ValidationError("basis element 0 must be the degree-0 unit")
        self.top_degree = max(self.degrees)
        cap = max_degree_cap()
        if cap is not None and self.top_degree > cap:
            raise ValidationError(f"ring top degree {self.top_degree} exceeds HODGE_MAX_DEGREE={cap}")
        table: list[list[tuple[tuple[int, Fraction], ...]]] = [[() for _ in range(self.rank)] for _ in range(self.rank)]
        for (i, j), row in mul.items():
            table[i][j] = tuple((k, Fraction(c)) for k, c in sorted(row.items()) if c)
        for i in range(self.rank):
            table[0][i] = table[i][0] = ((i, Fraction(1)),)
        self._mul = table
        self.integral = {k: Fraction(c) for k, c in integral.items() if c}
        for k in self.integral:
            if self.degrees[k] != self.top_degree:
                raise ValidationError("integration functional must vanish below the top degree")
        self.gens = dict(gens)
        self.kind = kind
        self.meta = meta
        self.labels = tuple(_render_mono(m) for m in self.monos)
        self._key = None

    # -- identity -------------------------------------------------------
    def key(self):
        if self._key is None:
            self._key = (self.labels, self.degrees,
                         tuple(tuple(row) for row in self._mul),
                         tuple(sorted(self.integral.items())))
        return self._key

    def __eq__(self, other):
        return isinstance(other, CohomRing) and (self is other or self.key() == other.key())

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"CohomRing({self.kind}, dim={self.top_degree}, basis={list(self.labels)})"

    # -- vector arithmetic on dicts idx -> Fraction ----------------------
    def mul_basis(self, i: int, j: int):
        return self._mul[i][j]

    def mul_vec(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            row = self._mul[i]
            for j, b in v.items():
                for k, s in row[j]:
                    out[k] = out.get(k, 0) + a * b * s
        return {k: c for k, c in out.items() if c}

    def integrate_vec(self, u: Mapping[int, Fraction]) -> Fraction:
        return sum((c * self.integral[k] for k, c in u.items() if k in self.integral), Fraction(0))

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no basis element {label!r} in {self!r}") from None

    def basis_of_degree(self, d: int) -> list[int]:
        return [i for i, deg in enumerate(self.degrees) if deg == d]

    # -- element constructors -------------------------------------------
    def one(self):
        from .classes import ClassPolynomial
        return ClassPolynomial(self, {(0, 0): 1})

    def zero(self):
        from .classes import ClassPolynomial
        return ClassPolynomial(self, {})

    def basis_element(self, idx: int):
        from .classes import ClassPolynomial
        return ClassPolynomial(self, {(0, idx): 1})

    def gen(self, name: str):
        if name not in self.gens:
            raise KeyError(f"ring has no generator {name!r}; generators: {sorted(self.gens)}")
        return self.basis_element(self.gens[name])

    def fundamental_dual(self):
        """Top-degree class integrating to 1 (a 'point class')."""
        from .classes import ClassPolynomial
        (k, c), *_ = sorted(self.integral.items())
        return ClassPolynomial(self, {(0, k): 1 / c})

    def validate(self) -> None:
        """Check grading, commutativity and associativity of the table."""
        n = self.rank
        for i in range(n):
            for j in range(n):
                for k, _c in self._mul[i][j]:
                    if self.degrees[k] != self.degrees[i] + self.degrees[j]:
                        raise ValidationError(f"{self.labels[i]}*{self.labels[j]} breaks the grading")
                if dict(self._mul[i][j]) != dict(self._mul[j][i]):
                    raise ValidationError(f"{self.labels[i]}*{self.labels[j]} is not commutative")
        for i, j, k in itertools.product(range(n), repeat=3):
            left = self.mul_vec(self.mul_vec({i: Fraction(1)}, {j: Fraction(1)}), {k: Fraction(1)})
            right = self.mul_vec({i: Fraction(1)}, self.mul_vec({j: Fraction(1)}, {k: Fraction(1)}))
            if left != right:
                raise ValidationError(f"structure constants not associative at {self.labels[i]}, {self.labels[j]}, {self.labels[k]}")
        if not self.integral:
            raise ValidationError("empty integration functional")


def point_ring() -> CohomRing:
    return CohomRing([()], [0], {}, {0: 1}, {}, "point")


def projective_space(n: int) -> CohomRing:
    """``Q[h]/(h^(n+1))`` with ``int h^n = 1``."""
    if n < 0:
        raise ValidationError("projective space dimension must be >= 0")
    if n == 0:
        return point_ring()
    monos = [()] + [(("h", k),) for k in range(1, n + 1)]
    mul = {(i, j): {i + j: 1} for i in range(n + 1) for j in range(n + 1) if i + j <= n}
    return CohomRing(monos, range(n + 1), mul, {n: 1}, {"h": 1}, "proj", n=n)


def _rename(m: Mono, suffix: str) -> Mono:
    return tuple((g + suffix, e) for g, e in m)


def product_ring(*factors: CohomRing) -> CohomRing:
    """Tensor product; generator ``g`` of factor ``k`` is renamed ``g<k>`` (1-based)."""
    if not factors:
        return point_ring()
    if len(factors) == 1:
        return factors[0]
    idx_tuples = list(itertools.product(*(range(R.rank) for R in factors)))
    pos = {t: n for n, t in enumerate(idx_tuples)}
    monos = []
    degrees = []
    for t in idx_tuples:
        m: Mono = ()
        for k, (R, i) in enumerate(zip(factors, t)):
            m += _rename(R.monos[i], str(k + 1))
        monos.append(m)
        degrees.append(sum(R.degrees[i] for R, i in zip(factors, t)))
    mul: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a, s in enumerate(idx_tuples):
        for b, t in enumerate(idx_tuples):
            terms = [((), Fraction(1))]
            for R, i, j in zip(factors, s, t):
                row = R.mul_basis(i, j)
                if not row:
                    terms = []
                    break
                terms = [(acc + (k,), c * cc) for acc, c in terms for k, cc in row]
            if terms:
                mul[(a, b)] = {}
                for key, c in terms:
                    mul[(a, b)][pos[key]] = mul[(a, b)].get(pos[key], 0) + c
    integral = {}
    for combo in itertools.product(*(R.integral.items() for R in factors)):
        key = tuple(k for k, _ in combo)
        val = Fraction(1)
        for _, c in combo:
            val *= c
        integral[pos[key]] = val
    gens = {}
    for k, R in enumerate(factors):
        for g, i in R.gens.items():
            t = tuple(i if kk == k else 0 for kk in range(len(factors)))
            gens[g + str(k + 1)] = pos[t]
    return CohomRing(monos, degrees, mul, integral, gens, "product",
                     factors=tuple(factors), index=pos)


def projective_bundle(base: CohomRing, bundle) -> CohomRing:
    """Cohomology of the bundle of lines ``P(V)`` over ``base``.

    ``xi = c_1(O(1))`` satisfies ``xi^r + c_1(V) xi^(r-1) + ... + c_r(V) = 0``
    and pushes forward as ``xi^(r-1+i) -> s_i(V)`` with ``s = c(V)^(-1)``.
    """
    from .classes import ClassPolynomial  # noqa: F401  (bundle chern classes)

    if bundle.ring != base:
        raise ValidationError("bundle must live on the base ring")
    r = bundle.rank
    if r < 1:
        raise ValidationError("projective bundle needs rank >= 1")
    chern = [bundle.chern_vec(i) for i in range(r + 1)]  # chern[0] = unit
    # xi^m = sum_k a[m][k] xi^k, k < r, a[m][k] a base-ring vector
    powers: list[list[Vec]] = []
    for m in range(2 * r - 1):
        if m < r:
            powers.append([{0: Fraction(1)} if k == m else {} for k in range(r)])
            continue
        prev = powers[m - 1]
        # xi * xi^(m-1): shift up, then replace xi^r
        shifted = [{}] + prev[:-1]
        top = prev[-1]
        row = []
        for k in range(r):
            acc = dict(shifted[k])
            if top:
                ck = base.mul_vec(top, chern[r - k])
                for idx, c in ck.items():
                    acc[idx] = acc.get(idx, 0) - c
            row.append({i: c for i, c in acc.items() if c})
        powers.append(row)
    pairs = [(b, k) for k in range(r) for b in range(base.rank)]
    pos = {p: n for n, p in enumerate(pairs)}
    monos = [base.monos[b] + ((("xi", k),) if k else ()) for b, k in pairs]
    degrees = [base.degrees[b] + k for b, k in pairs]
    mul: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a, (b1, k1) in enumerate(pairs):
        for c_, (b2, k2) in enumerate(pairs):
            bb = dict(base.mul_basis(b1, b2))
            if not bb:
                continue
            out: dict[int, Fraction] = {}
            for k, coef_vec in enumerate(powers[k1 + k2]):
                if not coef_vec:
                    continue
                prod = base.mul_vec(bb, coef_vec)
                for idx, c in prod.items():
                    out[pos[(idx, k)]] = out.get(pos[(idx, k)], 0) + c
            if out:
                mul[(a, c_)] = out
    integral = {pos[(b, r - 1)]: c for b, c in base.integral.items()}
    gens = {g: pos[(i, 0)] for g, i in base.gens.items()}
    if r > 1:
        gens["xi"] = pos[(0, 1)]
    return CohomRing(monos, degrees, mul, integral, gens, "projbundle",
                     base=base, bundle=bundle, fiber_rank=r, index=pos)


def custom_ring(labels: Sequence[str], degrees: Sequence[int],
                products: Mapping[tuple[str, str], Mapping[str, object]],
                top: str, top_integral=1, gens: Sequence[str] | None = None,
                validate: bool = True) -> CohomRing:
    """Ring from an explicit multiplication table.

    ``labels[0]`` must be the unit.  ``products`` lists ``(a, b) -> {c: coef}``
    for non-unit pairs; missing mirrored pairs are filled in by commutativity
    and missing pairs are zero.
    """
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise ValidationError("duplicate basis labels")
    pos = {lab: i for i, lab in enumerate(labels)}
    mul: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (a, b), row in products.items():
        for lab in (a, b, *row):
            if lab not in pos:
                raise ValidationError(f"unknown basis label {lab!r}")
        vals = {pos[c]: Fraction(v) for c, v in row.items()}
        mul[(pos[a], pos[b])] = vals
        mul.setdefault((pos[b], pos[a]), vals)
    monos = [()] + [((lab, 1),) for lab in labels[1:]]
    gen_names = gens if gens is not None else [lab for lab, d in zip(labels, degrees) if d == 1]
    ring = CohomRing(monos, degrees, mul, {pos[top]: top_integral},
                     {g: pos[g] for g in gen_names}, "custom")
    if validate:
        ring.validate()
    return ring
