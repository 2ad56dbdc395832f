"""Evaluate parsed scripts against the library."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .. import charclass as cc
from .. import motivic as mv
from .. import rhcurve as rh
from .. import stratmaps as sm
from ..errors import ValidationError
from ..hodgestruct import MixedHodgeComplex, chi_y_of_complex, e_polynomial_of_complex, poincare_dual, specialize_genus
from ..polycore import EPolynomial, GenusPolynomial, LaurentPolynomial, YRational
from . import parser as ast
from .lexer import Diagnostic, DslError

__all__ = ["Evaluator", "Result", "AssertionFailed", "to_json", "to_text"]


class AssertionFailed(Exception):
    def __init__(self, stmt, left, right):
        self.stmt, self.left, self.right = stmt, left, right
        super().__init__(f"line {stmt.line}: assertion failed: {stmt.text} (left = {to_text(left)}, right = {to_text(right)})")


@dataclass
class Result:
    line: int
    kind: str
    text: str
    value: Any
    ok: bool | None = None

    def to_json(self) -> dict:
        out = {"line": self.line, "kind": self.kind, "query": self.text, "value": to_json(self.value)}
        if self.ok is not None:
            out["ok"] = self.ok
        return out


@dataclass(frozen=True)
class _Shape:
    """``P n`` or ``A n`` before it is read as a variety or a ring."""

    kind: str
    n: int

    def variety(self) -> mv.VarietyClass:
        if self.kind == "P":
            return mv.proj_space(self.n)
        if self.n == 0:
            return mv.point()
        return (mv.affine_line() ** self.n).declare(name=f"A{self.n}")

    def ring(self) -> cc.CohomRing:
        if self.kind != "P":
            raise ValidationError("only projective spaces have a built-in cohomology ring")
        return cc.projective_space(self.n) if self.n else cc.point_ring()


# -- rendering -----------------------------------------------------------------

def to_text(v) -> str:
    if isinstance(v, LaurentPolynomial):
        return v.to_text("y")
    if isinstance(v, (EPolynomial, cc.ClassPolynomial, mv.VarietyClass, Fraction, int, bool, str)):
        return str(v)
    if isinstance(v, YRational):
        return str(v)
    if isinstance(v, cc.ClassPair):
        return f"lhs = {v.lhs}; rhs = {v.rhs}; holds = {v.holds}"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {to_text(x)}" for k, x in v.items()) + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(to_text(x) for x in v) + "]"
    if isinstance(v, MixedHodgeComplex):
        return f"mhs {to_text(v.to_json())}"
    return repr(v)


def to_json(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (LaurentPolynomial, EPolynomial, cc.ClassPolynomial, MixedHodgeComplex)):
        return v.to_json()
    if isinstance(v, cc.ClassPair):
        return {"lhs": v.lhs.to_json(), "rhs": v.rhs.to_json(), "holds": v.holds}
    if isinstance(v, mv.VarietyClass):
        return {"class": str(v), "epoly": v.epoly.to_json(), "dim": v.dim,
                "smooth": v.smooth, "complete": v.complete}
    if isinstance(v, dict):
        return {str(k): to_json(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [to_json(x) for x in v]
    return str(v)


def _equal(a, b) -> bool:
    if isinstance(a, mv.VarietyClass) or isinstance(b, mv.VarietyClass):
        return mv._coerce(a).same_class(mv._coerce(b))
    if isinstance(a, cc.ClassPair):
        return a.holds == bool(b)
    if isinstance(a, (int, Fraction)) and isinstance(b, LaurentPolynomial):
        a, b = b, a
    return a == b


# -- evaluator -------------------------------------------------------------------

@dataclass
class Evaluator:
    assume_trivial_monodromy: bool = False
    seed: int = 0
    env: dict = field(default_factory=dict)

    # entry point
    def run(self, script: ast.Script, on_result=None) -> list[Result]:
        out = []
        for stmt in script.statements:
            if isinstance(stmt, ast.Let):
                self.env[stmt.name] = self.eval(stmt.expr)
                continue
            if isinstance(stmt, ast.Assert):
                left = self.query(stmt.left) if isinstance(stmt.left, ast.Query) else self.eval(stmt.left)
                right = self.eval(stmt.right)
                same = _equal(left, right)
                ok = same if stmt.op == "==" else not same
                res = Result(stmt.line, "assert", stmt.text, left, ok)
                out.append(res)
                if on_result:
                    on_result(res)
                if not ok:
                    raise AssertionFailed(stmt, left, right)
                continue
            res = Result(stmt.line, stmt.kind, stmt.text, self.query(stmt))
            out.append(res)
            if on_result:
                on_result(res)
        return out

    # expressions
    def eval(self, node, ring: cc.CohomRing | None = None):
        m = getattr(self, "_e_" + type(node).__name__)
        return m(node, ring)

    def _e_Num(self, n, ring):
        return n.value

    def _e_Str(self, n, ring):
        return n.value

    def _e_Name(self, n, ring):
        if n.id in self.env:
            return self.env[n.id]
        if ring is not None:
            if n.id in ring.gens:
                return ring.gen(n.id)
            if n.id == "O":
                return cc.Bundle.trivial(ring, 1, "O")
            if n.id == "T":
                return self._tangent(ring)
        builtin = {
            "y": LaurentPolynomial.y(),
            "u": EPolynomial({(1, 0): 1}),
            "v": EPolynomial({(0, 1): 1}),
            "pt": mv.point(),
            "L": mv.affine_line(),
            "Gm": mv.torus(),
        }
        if n.id in builtin:
            return builtin[n.id]
        where = f" (generators here: {', '.join(ring.gens)})" if ring is not None else ""
        raise DslError([Diagnostic("error", n.line, n.col, "E-UNDEF", f"unknown name {n.id!r}{where}")], "parse")

    def _e_Neg(self, n, ring):
        return -self._arith(self.eval(n.operand, ring))

    def _e_Bin(self, n, ring):
        a = self._arith(self.eval(n.left, ring))
        b = self._arith(self.eval(n.right, ring))
        try:
            if n.op == "+":
                return a + b
            if n.op == "-":
                return a - b
            if n.op == "*":
                return a * b
            if n.op == "/":
                if isinstance(b, int):
                    b = Fraction(b)
                return a / b
            if n.op == "^":
                if not isinstance(b, int):
                    raise ValidationError("exponent must be an integer")
                return a ** b
        except TypeError as exc:
            raise self._bad(n, f"cannot apply {n.op!r} to {type(a).__name__} and {type(b).__name__}") from exc
        raise self._bad(n, f"unknown operator {n.op!r}")

    @staticmethod
    def _arith(v):
        return v.variety() if isinstance(v, _Shape) else v

    def _bad(self, n, msg):
        return ValidationError(f"line {n.line}:{n.col}: {msg}")

    def _e_Shape(self, n, ring):
        k = self.eval(n.n)
        return _Shape(n.kind, k)

    def _e_As(self, n, ring):
        v = self.eval(n.expr, ring)
        if n.target == "var":
            return self.variety(v, n)
        if n.target == "ring":
            return self.ring(v, n)
        if not isinstance(v, cc.Bundle):
            raise self._bad(n, "expected a bundle")
        return v

    def _e_Atom(self, n, ring):
        ep = self.eval(n.epoly)
        if isinstance(ep, int):
            ep = EPolynomial.constant(ep)
        if not isinstance(ep, EPolynomial):
            raise self._bad(n, "atom needs an E-polynomial")
        return mv.atom(n.name, ep, self.eval(n.dim), n.smooth, n.complete)

    def _e_Table(self, n, ring):
        if n.kind == "mhs":
            return MixedHodgeComplex({tuple(k.value for k in key): self._int(self.eval(v), n) for key, v in n.entries})
        if n.kind == "epoly":
            return EPolynomial({tuple(k.value for k in key): self._int(self.eval(v), n) for key, v in n.entries})
        if ring is None:
            raise self._bad(n, "hodgecoll needs a ring: write 'hodgecoll {...} on R'")
        entries = {}
        for key, v in n.entries:
            b = self.eval(v, ring)
            if isinstance(b, int):
                b = cc.Bundle.trivial(ring, b)
            if not isinstance(b, cc.Bundle):
                raise self._bad(n, f"hodgecoll entry {tuple(k.value for k in key)} is not a bundle")
            entries[tuple(k.value for k in key)] = b
        return cc.HodgeBundleCollection(entries)

    def _int(self, v, n) -> int:
        if isinstance(v, LaurentPolynomial) and v.degree in (0, None) and v.low_degree in (0, None):
            v = v.coeff(0)
        if isinstance(v, Fraction) and v.denominator == 1:
            v = int(v)
        if not isinstance(v, int):
            raise self._bad(n, f"expected an integer, got {to_text(v)}")
        return v

    def _e_ListLit(self, n, ring):
        return [self.eval(x, ring) for x in n.items]

    def _e_OnRing(self, n, ring):
        R = self.ring(self.eval(n.ring), n)
        return self.eval(n.expr, R)

    def _e_BundleSpec(self, n, ring):
        if ring is None:
            raise self._bad(n, "bundle spec needs a ring: write '[rank r; c1=...] on R'")
        rank = self._int(self.eval(n.rank, ring), n)
        chern = []
        for i in range(1, max(n.chern, default=0) + 1):
            c = self.eval(n.chern[i], ring) if i in n.chern else 0
            chern.append(self._class(c, ring, n))
        return cc.Bundle(ring, rank, tuple(chern))

    def _class(self, v, ring, n) -> cc.ClassPolynomial:
        if isinstance(v, cc.ClassPolynomial):
            return v
        if isinstance(v, (int, Fraction, LaurentPolynomial)):
            return ring.one() * v
        raise self._bad(n, f"expected a class on the ring, got {type(v).__name__}")

    def _e_RingProduct(self, n, ring):
        return cc.product_ring(*(self.ring(self.eval(f), n) for f in n.factors))

    def _e_RingProjBundle(self, n, ring):
        base = self.ring(self.eval(n.base), n)
        V = self.eval(n.bundle, base)
        if isinstance(V, int):
            V = cc.Bundle.trivial(base, V)
        if not isinstance(V, cc.Bundle) or V.ring != base:
            raise self._bad(n, "projbundle bundle must be a bundle on the base")
        R = cc.projective_bundle(base, V)
        if n.tangent is not None:
            TB = self.eval(n.tangent, base)
            self._base_tangents[id(R)] = (R, TB)
        return R

    def _e_Call(self, n, ring):
        args = [self.eval(a, ring) for a in n.args]
        fn = n.fn
        if fn == "O":
            if ring is None:
                raise self._bad(n, "O(d) needs a ring: write 'O(d) on R'")
            return self._line(ring, [self._int(a, n) for a in args], n)
        if fn == "trivial":
            return cc.Bundle.trivial(ring, self._int(args[0], n))
        if fn == "dual":
            if len(args) == 1 and isinstance(args[0], cc.Bundle):
                return args[0].dual()
            P, k = args
            return poincare_dual(self.genus(P, n), self._int(k, n))
        if fn == "twist":
            return args[0].twist(args[1])
        if fn in ("chi_y", "chi_y_c", "epoly", "euler"):
            X = args[0]
            if fn == "chi_y_c":
                return self.genus_c(X, n)
            if fn == "epoly":
                return self.epoly(X, n)
            g = self.genus(X, n)
            return g if fn == "chi_y" else specialize_genus(g, "euler")
        if fn == "blowup":
            X, Y, r = args
            return mv.blowup_class(self.variety(X, n), self.variety(Y, n), self._int(r, n))
        if fn == "shift":
            return args[0].shifted(self._int(args[1], n))
        if fn == "smooth":
            X = self.variety(args[0], n)
            return X.declare(smooth=True, dim=self._int(args[1], n) if len(args) > 1 else None)
        if fn == "complete":
            return self.variety(args[0], n).declare(complete=True)
        if fn == "integrate":
            return cc.to_genus(args[0].integrate())
        if fn == "tangent":
            return self._tangent(self.ring(args[0], n))
        raise DslError([Diagnostic("error", n.line, n.col, "E-UNDEF", f"unknown function {fn!r}")], "parse")

    def _line(self, ring, degs, n) -> cc.Bundle:
        hyper = self._hyperplanes(ring)
        if not degs:
            degs = [0]
        if len(degs) != len(hyper):
            raise self._bad(n, f"O(...) on this ring takes {len(hyper)} degree(s)")
        c1 = ring.zero()
        for d, h in zip(degs, hyper):
            c1 = c1 + h * d
        return cc.Bundle.line(ring, c1, f"O({', '.join(map(str, degs))})")

    def _hyperplanes(self, ring):
        if ring.kind == "proj":
            return [ring.gen("h")]
        if ring.kind == "product":
            hs = [g for g in ring.gens if ring.degrees[ring.index(g)] == 1]
            return [ring.gen(g) for g in hs]
        if ring.kind == "projbundle":
            return [ring.gen("xi")]
        raise ValidationError(f"O(d) is not defined on a {ring.kind} ring")

    def _e_Block(self, n, ring):
        projective = "projective" in n.flags
        if n.kind == "stalks":
            strata = []
            for r in n.records:
                if set(r.attrs) - {"open", "stalk"}:
                    raise self._bad(r, f"stalks records take open= and stalk=, got {sorted(r.attrs)}")
                stalk = self.eval(r.attrs["stalk"])
                if not isinstance(stalk, MixedHodgeComplex):
                    raise self._bad(r, "stalk must be an mhs table")
                strata.append(sm.StalkStratum(self.genus_c(self.eval(r.attrs["open"]), r), stalk,
                                              "varying" not in r.flags))
            return sm.StalkSumDescriptor(strata)
        strata, generic = [], []
        # "A: ... under B" puts A in the closure of B
        covers = {r.id: set() for r in n.records}
        for r in n.records:
            for above in r.under:
                if above not in covers:
                    raise self._bad(r, f"stratum {r.id!r} is under unknown stratum {above!r}")
                covers[above].add(r.id)
        for r in n.records:
            unknown = set(r.attrs) - {"closure", "open", "fiber"}
            if unknown:
                raise self._bad(r, f"unknown stratum attribute(s) {sorted(unknown)}")
            if "fiber" not in r.attrs:
                raise self._bad(r, f"stratum {r.id!r} needs fiber=")
            g = self.genus if projective else self.genus_c
            kw = {}
            if "closure" in r.attrs:
                kw["closure_genus"] = g(self.eval(r.attrs["closure"]), r)
            if "open" in r.attrs:
                kw["open_genus"] = self.genus_c(self.eval(r.attrs["open"]), r)
            if "generic" in r.flags:
                generic.append(r.id)
            strata.append(sm.Stratum(r.id, g(self.eval(r.attrs["fiber"]), r), covers=frozenset(covers[r.id]),
                                     monodromy_trivial="trivial-monodromy" in r.flags, **kw))
        if len(generic) != 1:
            raise self._bad(n, f"exactly one stratum must be marked generic, found {len(generic)}")
        return sm.StratifiedMapDescriptor(strata, generic[0], projective=projective)

    def _e_Fibration(self, n, ring):
        crit = []
        for c in n.critical:
            if c.kind == "isolated":
                pts = self.eval(c.items)
                pts = pts if isinstance(pts, list) else [pts]
                if not all(isinstance(p, MixedHodgeComplex) for p in pts):
                    raise self._bad(c, "isolated critical value takes a list of mhs tables")
                crit.append(rh.Isolated(pts))
            elif c.kind == "vanishing":
                crit.append(rh.Vanishing(self.eval(c.items), self._int(self.eval(c.sing), c)))
            else:
                strata = []
                for r in c.items:
                    strata.append(rh.MilnorStratum(self.genus_c(self.eval(r.attrs["open"]), r),
                                                   self.eval(r.attrs["milnor"])))
                crit.append(rh.Stratified(strata))
        f = rh.CurveFibration(self.genus_c(self.eval(n.attrs["base"]), n), self.genus(self.eval(n.attrs["fiber"]), n),
                              self._int(self.eval(n.attrs["dim"]), n), crit)
        self._attested[id(f)] = (f, "trivial-monodromy" in n.flags)
        return f

    # coercions
    def variety(self, v, n) -> mv.VarietyClass:
        if isinstance(v, _Shape):
            return v.variety()
        if isinstance(v, int):
            return mv._coerce(v)
        if isinstance(v, mv.VarietyClass):
            return v
        raise self._bad(n, f"expected a variety, got {type(v).__name__}")

    def ring(self, v, n) -> cc.CohomRing:
        if isinstance(v, _Shape):
            return v.ring()
        if isinstance(v, mv.VarietyClass) and v.op == "leaf" and v.name == "pt":
            return cc.point_ring()
        if isinstance(v, cc.CohomRing):
            return v
        raise self._bad(n, f"expected a ring, got {type(v).__name__}")

    def genus_c(self, v, n) -> GenusPolynomial:
        if isinstance(v, (_Shape, mv.VarietyClass)):
            return mv.chi_y_c(self.variety(v, n))
        return self.genus(v, n)

    def genus(self, v, n) -> GenusPolynomial:
        if isinstance(v, (_Shape, mv.VarietyClass)):
            return mv.chi_y(self.variety(v, n))
        if isinstance(v, MixedHodgeComplex):
            return chi_y_of_complex(v)
        if isinstance(v, (int, LaurentPolynomial)):
            return GenusPolynomial.coerce(v)
        raise self._bad(n, f"expected a genus, variety or mhs table, got {type(v).__name__}")

    def epoly(self, v, n) -> EPolynomial:
        if isinstance(v, MixedHodgeComplex):
            return e_polynomial_of_complex(v)
        if isinstance(v, EPolynomial):
            return v
        return mv.e_polynomial(self.variety(v, n))

    def _tangent(self, R):
        if id(R) in self._base_tangents:
            return cc.tangent_bundle(R, self._base_tangents[id(R)][1])
        return cc.tangent_bundle(R)

    def __post_init__(self):
        self._base_tangents: dict = {}
        self._attested: dict = {}

    # queries
    def query(self, q: ast.Query):
        m = getattr(self, "_q_" + q.kind)
        return m(q, q.words[0] if q.words else None)

    def _args(self, q, lo, hi=None):
        hi = lo if hi is None else hi
        if not lo <= len(q.args) <= hi:
            want = str(lo) if lo == hi else f"{lo}-{hi}"
            raise self._bad(q, f"{q.kind} takes {want} argument(s), got {len(q.args)}")
        return [self.eval(a) for a in q.args]

    def _q_genus(self, q, word):
        (X,) = self._args(q, 1)
        if word == "chi_y_c":
            return self.genus_c(X, q)
        if word == "weight":
            return self.epoly(X, q).weight()
        g = self.genus(X, q)
        if word in ("euler", "arithmetic", "signature"):
            return specialize_genus(g, word)
        if word == "dual":
            V = self.variety(X, q)
            return poincare_dual(g, V.dim)
        return g

    def _q_epoly(self, q, word):
        (X,) = self._args(q, 1)
        return self.epoly(X, q)

    def _descriptor(self, q, kind):
        (D,) = self._args(q, 1)
        if not isinstance(D, kind):
            raise self._bad(q, f"expected a {kind.__name__}")
        return D

    def _q_strat(self, q, word):
        if word == "stalk":
            D = self._descriptor(q, sm.StalkSumDescriptor)
            return sm.stalk_sum_chi(D, self.assume_trivial_monodromy)
        D = self._descriptor(q, sm.StratifiedMapDescriptor)
        if word == "hat":
            return sm.hat_genera(D)
        if word == "additive":
            return sm.additive_stratum_sum(D)
        if word == "chi":
            return sm.total_space_chi(D, self.assume_trivial_monodromy)
        if word == "report":
            return sm.stratified_report(D, self.assume_trivial_monodromy, compact=not D.projective)
        return sm.total_space_chi_c(D, self.assume_trivial_monodromy)

    def _q_rh(self, q, word):
        args = self._args(q, 1, 2)
        f = args[0]
        if not isinstance(f, rh.CurveFibration):
            raise self._bad(q, "rh expects a fibration")
        if word == "epoly":
            return rh.rh_total_e_polynomial(f)
        if word == "special":
            k = self._int(args[1], q) if len(args) > 1 else 1
            if not 1 <= k <= len(f.critical):
                raise self._bad(q, f"critical value index {k} out of range 1..{len(f.critical)}")
            return rh.special_fiber_chi(f.critical[k - 1], f.generic_fiber, f.fiber_dim)
        attested = self.assume_trivial_monodromy or self._attested.get(id(f), (None, False))[1]
        total = rh.rh_total_chi_c(f, attested)
        return specialize_genus(total, "euler") if word == "euler" else total

    def _ring_tangent(self, q, R):
        if "tangent" in q.opts:
            T = self.eval(q.opts["tangent"], R)
            if not isinstance(T, cc.Bundle):
                raise self._bad(q, "tangent= must be a bundle")
            return T
        return self._tangent(R)

    def _check_opts(self, q, allowed):
        bad = set(q.opts) - set(allowed)
        if bad:
            raise self._bad(q, f"unknown option(s) {sorted(bad)} for {q.kind}")

    def _ring_arg(self, q):
        if not q.args:
            raise self._bad(q, f"{q.kind} needs a ring")
        return self.ring(self.eval(q.args[0]), q)

    def _rest(self, q, R, count):
        rest = q.args[1:]
        if len(rest) > count:
            raise self._bad(q, f"too many arguments for {q.kind}")
        return [self.eval(a, R) for a in rest]

    def _q_ghrr(self, q, word):
        self._check_opts(q, ("tangent", "alpha", "log", "ext"))
        R = self._ring_arg(q)
        T = self._ring_tangent(q, R)
        (E,) = self._rest(q, R, 1) or [None]
        if "alpha" in q.opts:
            return cc.higher_chi_y(R, T, self._class(self.eval(q.opts["alpha"], R), R, q))
        if "log" in q.opts:
            om = self.eval(q.opts["log"], R)
            ext = self.eval(q.opts["ext"], R) if "ext" in q.opts else None
            return cc.log_chi_y(R, T, om, ext)
        if isinstance(E, int):
            E = cc.Bundle.trivial(R, E)
        return cc.ghrr(R, T, E)

    def _coll(self, q, R, v):
        if not isinstance(v, cc.HodgeBundleCollection):
            raise self._bad(q, "expected a hodgecoll")
        if v.ring is not None and v.ring != R:
            raise self._bad(q, "hodgecoll lives on a different ring")
        return v

    def _q_meyer(self, q, word):
        self._check_opts(q, ("tangent",))
        R = self._ring_arg(q)
        (C,) = self._rest(q, R, 1)
        C = self._coll(q, R, C)
        f = cc.meyer_twisted_normalized if word == "normalized" else cc.meyer_twisted
        return f(R, self._ring_tangent(q, R), C)

    def _q_am(self, q, word):
        self._check_opts(q, ("tangent",))
        R = self._ring_arg(q)
        (C,) = self._rest(q, R, 1)
        return cc.atiyah_meyer_chi(R, self._ring_tangent(q, R), self._coll(q, R, C), word or "pq")

    def _q_class(self, q, word):
        self._check_opts(q, ("tangent",))
        word = word or "hirzebruch"
        if word in ("todd", "ch", "lambda", "segre"):
            (E,) = self._args(q, 1)
            if not isinstance(E, cc.Bundle):
                raise self._bad(q, f"class {word} expects a bundle")
            if word == "segre":
                return cc.segre_classes(E)
            return {"todd": cc.todd_class, "ch": cc.chern_character, "lambda": cc.lambda_y_class}[word](E)
        R = self._ring_arg(q)
        if word in ("hirzebruch", "normalized"):
            self._rest(q, R, 0)
            return cc.hirzebruch_class(self._ring_tangent(q, R), normalized=word == "normalized")
        if word == "meyer":
            (C,) = self._rest(q, R, 1)
            return cc.class_level_meyer(R, self._ring_tangent(q, R), self._coll(q, R, C))
        if word == "atiyah":
            self._rest(q, R, 0)
            return cc.class_level_atiyah_check(self._model(q, R))
        if word == "push":
            (cls,) = self._rest(q, R, 1)
            cls = self._class(cls, R, q)
            model = self._model(q, R)
            return model.push(cls)
        raise self._bad(q, f"unknown class query {word!r}")

    def _model(self, q, R):
        if R.kind == "product" and len(R.meta["factors"]) == 2:
            return cc.ProductModel(*R.meta["factors"])
        if R.kind == "projbundle":
            TB = self._base_tangents.get(id(R), (None, None))[1]
            return cc.ProjectiveBundleModel(R.meta["base"], R.meta["bundle"], TB)
        raise self._bad(q, "class atiyah needs a two-factor product or a projective-bundle ring")

    def _q_verify(self, q, word):
        from ..verify import run_suite
        return run_suite(word, seed=self.seed)

