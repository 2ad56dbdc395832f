"""Built-in verification suites.

``paper-examples`` replays the worked examples, ``properties`` runs seeded
randomized invariant batteries and ``cross-checks`` compares independent
routes to the same number (class level against genus level, two ring
presentations of one space, Euler specializations).  Every check returns a
record ``{"name", "ok", "detail"}``.
"""
from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

from . import charclass as cc
from . import motivic as mv
from . import rhcurve as rh
from . import stratmaps as sm
from .hodgestruct import MixedHodgeComplex, chi_y_of_complex, e_polynomial_of_complex, poincare_dual, specialize_genus
from .polycore import EPolynomial, GenusPolynomial, specialize_e

__all__ = [
    "SUITES",
    "run_suite",
    "random_genus",
    "random_poset",
    "random_bundle",
    "random_ring",
    "random_hodge_collection",
    "builtin_fibrations",
    "tanh_series",
]

Y = GenusPolynomial.y()


def _check(name, ok, detail=""):
    return {"name": name, "ok": bool(ok), "detail": detail}


def _cmp(name, got, want):
    return _check(name, got == want, f"got {got}, want {want}")


# -- random generators ------------------------------------------------------------

def random_genus(rng: random.Random, deg: int = 3, span: int = 4) -> GenusPolynomial:
    return GenusPolynomial({e: rng.randint(-span, span) for e in range(rng.randint(0, deg) + 1)})


def random_poset(rng: random.Random, max_strata: int = 8):
    """Consistent random descriptor plus its brute-force additive total.

    Open-stratum genera are drawn first; closure genera are their sums over
    the transitive order ideal, so ``sum_S chi(S) chi(F_S)`` is the truth.
    """
    n = rng.randint(1, max_strata)
    ids = [f"S{i}" for i in range(n)]
    generic = ids[-1]
    covers = {s: set() for s in ids}
    for i in range(n - 1):
        for j in range(i):
            if rng.random() < 0.4:
                covers[ids[i]].add(ids[j])
    below = {}
    for i, s in enumerate(ids):
        acc = set(ids[:-1]) if s == generic else set()
        for w in covers[s]:
            acc |= {w} | below[w]
        below[s] = acc
    open_g = {s: random_genus(rng) for s in ids}
    fiber = {s: random_genus(rng, 2, 3) for s in ids}
    strata = []
    for s in ids:
        closure = open_g[s]
        for w in below[s]:
            closure = closure + open_g[w]
        strata.append(sm.Stratum(s, fiber[s], closure_genus=closure, covers=frozenset(covers[s]),
                                 monodromy_trivial=True))
    rng.shuffle(strata)
    brute = GenusPolynomial()
    for s in ids:
        brute = brute + open_g[s] * fiber[s]
    return sm.StratifiedMapDescriptor(strata, generic), brute, below


def random_ring(rng: random.Random) -> cc.CohomRing:
    kind = rng.choice(["P", "P", "prod", "proj"])
    if kind == "P":
        return cc.projective_space(rng.randint(1, 4))
    if kind == "prod":
        return cc.product_ring(cc.projective_space(rng.randint(1, 2)), cc.projective_space(rng.randint(1, 2)))
    base = cc.projective_space(rng.randint(1, 2))
    return cc.projective_bundle(base, random_bundle(rng, base, rng.randint(1, 3)))


def random_bundle(rng: random.Random, ring: cc.CohomRing, rank: int | None = None, span: int = 3) -> cc.Bundle:
    """Sum of ``rank`` line bundles with random integral c_1.

    Arbitrary Chern data need not come from a bundle (integrality of
    Riemann-Roch fails), so only split bundles are drawn.
    """
    rank = rng.randint(0, 3) if rank is None else rank
    out = cc.Bundle.trivial(ring, 0)
    degree_one = ring.basis_of_degree(1)
    for _ in range(rank):
        c1 = ring.zero()
        for b in degree_one:
            c1 = c1 + ring.basis_element(b) * rng.randint(-span, span)
        out = out + cc.Bundle.line(ring, c1)
    return out


def random_hodge_collection(rng: random.Random, ring: cc.CohomRing, flat: bool = False) -> cc.HodgeBundleCollection:
    entries = {}
    for _ in range(rng.randint(1, 3)):
        key = (rng.randint(0, 2), rng.randint(0, 2))
        rank = rng.randint(1, 3)
        entries[key] = cc.Bundle.trivial(ring, rank) if flat else random_bundle(rng, ring, rank)
    return cc.HodgeBundleCollection(entries)


def tanh_series(n: int) -> tuple[Fraction, ...]:
    """``a / tanh(a/2) = sum_k 2 B_2k a^2k / (2k)!`` from the Bernoulli recurrence."""
    B = [Fraction(1)]
    for m in range(1, n + 1):
        B.append(-sum(Fraction(factorial(m + 1), factorial(k) * factorial(m + 1 - k)) * B[k]
                      for k in range(m)) / (m + 1))
    return tuple(2 * B[k] / factorial(k) if k % 2 == 0 else Fraction(0) for k in range(n + 1))


# -- built-in Riemann-Hurwitz instances ---------------------------------------------

NODE = MixedHodgeComplex({(1, 1, 1): 1}, label="node")


def builtin_fibrations():
    """``(name, fibration, base_euler, fiber_euler, milnor_numbers)``.

    All have P^1 fibres with trivial monodromy on their cohomology.
    """
    P1 = mv.chi_y_c(mv.proj_space(1))
    pencil = rh.CurveFibration(P1, P1, 2, [rh.Isolated([NODE]) for _ in range(3)])
    merged = rh.CurveFibration(P1, P1, 2, [rh.Isolated([NODE, NODE, NODE])])
    as_table = rh.CurveFibration(P1, P1, 2, [rh.Vanishing(NODE, 0) for _ in range(3)])
    as_strata = rh.CurveFibration(P1, P1, 2, [rh.Stratified([rh.MilnorStratum(GenusPolynomial.constant(1), NODE)])
                                              for _ in range(3)])
    ruled = rh.CurveFibration(P1, P1, 2)
    # blow-up of P^1 x P^1 at k points on distinct fibres: each becomes a node
    blown = [rh.CurveFibration(P1, P1, 2, [rh.Isolated([NODE]) for _ in range(k)]) for k in range(1, 4)]
    out = [
        ("conic-pencil", pencil, 2, 2, [1, 1, 1]),
        ("conic-pencil-merged", merged, 2, 2, [1, 1, 1]),
        ("conic-pencil-vanishing-tables", as_table, 2, 2, [1, 1, 1]),
        ("conic-pencil-strata", as_strata, 2, 2, [1, 1, 1]),
        ("ruled-surface", ruled, 2, 2, []),
    ]
    out += [(f"quadric-blown-up-{k}", f, 2, 2, [1] * k) for k, f in enumerate(blown, 1)]
    return out


# -- suites ------------------------------------------------------------------------

def paper_examples(seed: int = 0) -> list[dict]:
    out = []
    for n in range(11):
        want = GenusPolynomial({k: (-1) ** k for k in range(n + 1)})
        out.append(_cmp(f"chi_y(CP^{n})", mv.chi_y(mv.proj_space(n)), want))
    L, pt, Gm = mv.affine_line(), mv.point(), mv.torus()
    for n in range(5):
        punctured = (L ** (n + 1) - pt).declare(smooth=True, dim=n + 1)
        out.append(_cmp(f"chi_y_c(C^{n + 1} - 0)", mv.chi_y_c(punctured), (-Y) ** (n + 1) - 1))
        out.append(_cmp(f"chi_y(C^{n + 1} - 0)", mv.chi_y(punctured), 1 - (-Y) ** (n + 1)))
        hopf = mv.product_genus_check(mv.proj_space(n), Gm)
        out.append(_check(f"Hopf multiplicativity n={n}", hopf.holds and hopf.lhs == mv.chi_y_c(punctured)))
    out.append(_cmp("chi_y_c(C^*)", mv.chi_y_c(Gm), -Y - 1))
    out.append(_cmp("chi_y(C^*)", mv.chi_y(Gm), 1 + Y))

    F = MixedHodgeComplex({(0, 0, 0): 1, (1, 1, 0): 1, (1, 0, 1): 1}, label="cusp Milnor fibre")
    chiF = chi_y_of_complex(F)
    E = (L ** 2 - L).declare(smooth=True, dim=2, name="C^2 - cusp")
    B = Gm
    out.append(_cmp("cusp chi_y(F)", chiF, Y))
    out.append(_cmp("cusp chi_y_c(F)", poincare_dual(chiF, 1), GenusPolynomial.constant(-1)))
    out.append(_cmp("cusp E(F)", e_polynomial_of_complex(F), EPolynomial({(0, 0): 1, (1, 0): -1, (0, 1): -1})))
    out.append(_cmp("cusp chi_y_c(E)", mv.chi_y_c(E), Y ** 2 + Y))
    out.append(_cmp("cusp chi_y_c(B)", mv.chi_y_c(B), -Y - 1))
    out.append(_cmp("cusp chi_y(E)", mv.chi_y(E), 1 + Y))
    out.append(_cmp("cusp chi_y(B)", mv.chi_y(B), 1 + Y))
    out.append(_check("cusp non-multiplicativity", mv.chi_y(E) != mv.chi_y(B) * chiF,
                      f"chi_y(E) = {mv.chi_y(E)}, chi_y(B) chi_y(F) = {mv.chi_y(B) * chiF}"))
    out.append(_check("cusp non-multiplicativity (compact supports)",
                      mv.chi_y_c(E) != mv.chi_y_c(B) * poincare_dual(chiF, 1)))

    P2, P3 = mv.proj_space(2), mv.proj_space(3)
    out.append(_cmp("blow-up P^2 at a point", mv.chi_y_c(mv.blowup_class(P2, pt, 1)), 1 - 2 * Y + Y ** 2))
    out.append(_cmp("blow-up P^3 along P^1", mv.chi_y_c(mv.blowup_class(P3, mv.proj_space(1), 1)),
                    1 - 2 * Y + 2 * Y ** 2 - Y ** 3))
    for name, d, X in blowup_descriptors():
        out.append(_cmp(f"{name} via stratified sum", sm.total_space_chi_c(d), mv.chi_y_c(X)))

    pencil = builtin_fibrations()[0][1]
    out.append(_cmp("conic pencil on Bl4 P^2", rh.rh_total_chi_c(pencil, True), 1 - 5 * Y + Y ** 2))
    bl4 = mv.proj_space(2) + 4 * (mv.proj_space(1) - pt)
    out.append(_cmp("conic pencil vs blow-up formula", rh.rh_total_chi_c(pencil, True), mv.chi_y_c(bl4)))
    two_lines = mv.chi_y_c(2 * mv.proj_space(1) - pt)
    out.append(_cmp("nodal conic special fibre", rh.special_fiber_chi(rh.Vanishing(NODE, 0), 1 - Y, 1), two_lines))

    P1r = cc.projective_space(1)
    TP1 = cc.tangent_bundle(P1r)
    out.append(_cmp("log genus of (P^1, one point)", cc.log_chi_y(P1r, TP1, cc.Bundle.line(P1r, -P1r.gen("h"))),
                    mv.chi_y(mv.affine_line().declare(dim=1))))
    out.append(_cmp("log genus of (P^1, two points)", cc.log_chi_y(P1r, TP1, cc.Bundle.trivial(P1r, 1)),
                    mv.chi_y(Gm)))
    return out


def blowup_descriptors():
    """Blow-downs as stratified maps: generic fibre a point, P^r over the centre."""
    P2, P3, P1, pt = mv.proj_space(2), mv.proj_space(3), mv.proj_space(1), mv.point()
    one = GenusPolynomial.constant(1)

    def desc(X, Y, r):
        gen = sm.Stratum("U", one, closure_genus=mv.chi_y_c(X), monodromy_trivial=True)
        ctr = sm.Stratum("Z", mv.chi_y_c(mv.proj_space(r)), closure_genus=mv.chi_y_c(Y), monodromy_trivial=True)
        return sm.StratifiedMapDescriptor([gen, ctr], "U")

    return [
        ("blow-up P^2 at a point", desc(P2, pt, 1), mv.blowup_class(P2, pt, 1)),
        ("blow-up P^3 along P^1", desc(P3, P1, 1), mv.blowup_class(P3, P1, 1)),
        ("blow-up P^3 at a point", desc(P3, pt, 2), mv.blowup_class(P3, pt, 2)),
    ]


def properties(seed: int = 0, posets: int = 500, meyer: int = 200) -> list[dict]:
    rng = random.Random(seed)
    out = []
    bad_total = bad_tel = 0
    for _ in range(posets):
        d, brute, below = random_poset(rng)
        if sm.total_space_chi_c(d) != brute:
            bad_total += 1
        hats = sm.hat_genera(d)
        for s in d.strata:
            acc = hats[s.id]
            for w in below[s.id]:
                acc = acc + hats[w]
            if acc != d.closure_genus(s.id):
                bad_tel += 1
                break
    out.append(_check(f"stratified total = additive sum on {posets} posets", bad_total == 0, f"{bad_total} failures"))
    out.append(_check(f"hat-genus telescoping on {posets} posets", bad_tel == 0, f"{bad_tel} failures"))

    bad = 0
    for _ in range(200):
        P, n = random_genus(rng, 5), rng.randint(0, 6)
        if poincare_dual(poincare_dual(P, n), n) != P:
            bad += 1
    out.append(_check("Poincare duality is an involution", bad == 0, f"{bad} failures"))

    bad = 0
    for _ in range(200):
        a = EPolynomial({(rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-5, 5) for _ in range(4)})
        b = EPolynomial({(rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-5, 5) for _ in range(4)})
        for at in ("chi_y", "weight", "euler"):
            if specialize_e(a * b, at) != specialize_e(a, at) * specialize_e(b, at):
                bad += 1
    out.append(_check("specializations are ring homomorphisms", bad == 0, f"{bad} failures"))

    bad = 0
    for _ in range(100):
        K1 = MixedHodgeComplex({(rng.randint(0, 3), rng.randint(0, 2), rng.randint(0, 2)): rng.randint(0, 3)
                                for _ in range(4)})
        K2 = MixedHodgeComplex({(rng.randint(0, 3), rng.randint(0, 2), rng.randint(0, 2)): rng.randint(0, 3)
                                for _ in range(4)})
        if chi_y_of_complex(K1 + K2) != chi_y_of_complex(K1) + chi_y_of_complex(K2):
            bad += 1
        if chi_y_of_complex(K1) != specialize_e(e_polynomial_of_complex(K1), "chi_y"):
            bad += 1
    out.append(_check("chi_y additive and consistent with E", bad == 0, f"{bad} failures"))

    bad = 0
    for _ in range(40):
        R = random_ring(rng)
        E, F = random_bundle(rng, R), random_bundle(rng, R)
        for f in (cc.todd_class, cc.hirzebruch_class, cc.lambda_y_class, cc.chern_character):
            lhs, rhs = f(E + F), (f(E) + f(F) if f is cc.chern_character else f(E) * f(F))
            if lhs != rhs:
                bad += 1
        if cc.hirzebruch_class(E) != cc.todd_class(E) * cc.lambda_y_class(E.dual()):
            bad += 1
    out.append(_check("Whitney property and T_y = td * ch(lambda_y(dual))", bad == 0, f"{bad} failures"))

    bad = resid = 0
    for _ in range(meyer):
        R = random_ring(rng)
        T = cc.tangent_bundle(R)
        C = random_hodge_collection(rng, R)
        a = cc.meyer_twisted(R, T, C)
        integrand = cc.hc_y_character(C, R, True) * cc.hirzebruch_class(T, True)
        if integrand.integrate().den_power:
            resid += 1
        if a != cc.meyer_twisted_normalized(R, T, C):
            bad += 1
    out.append(_check(f"Meyer formula = normalized form on {meyer} inputs", bad == 0 and resid == 0,
                      f"{bad} mismatches, {resid} residual denominators"))

    bad = 0
    for _ in range(40):
        R = random_ring(rng)
        T = cc.tangent_bundle(R)
        flat = random_hodge_collection(rng, R, flat=True)
        if cc.atiyah_meyer_chi(R, T, flat) != cc.ghrr(R, T) * flat.rank_polynomial("pq"):
            bad += 1
        C = random_hodge_collection(rng, R)
        if _degree0(cc.k_theory_chi_y_character(C, R)) != C.rank_polynomial("pq"):
            bad += 1
    out.append(_check("flat collapse and degree-0 piece of ch(chi_y(f))", bad == 0, f"{bad} failures"))
    return out


def _degree0(cls: cc.ClassPolynomial) -> GenusPolynomial:
    return cc.to_genus(cls.basis_coefficient(0))


def cross_checks(seed: int = 0) -> list[dict]:
    rng = random.Random(seed)
    out = []
    bad = 0
    for _ in range(30):
        R = random_ring(rng)
        T = cc.tangent_bundle(R)
        C = random_hodge_collection(rng, R)
        if cc.to_genus(cc.class_level_meyer(R, T, C).integrate()) != cc.meyer_twisted(R, T, C):
            bad += 1
    out.append(_check("integrate(class_level_meyer) = meyer_twisted", bad == 0, f"{bad} failures"))

    P1 = cc.projective_space(1)
    models = [("P1 x P1 -> P1", cc.ProductModel(P1, P1)), ("P1 x P2 -> P1", cc.ProductModel(P1, cc.projective_space(2)))]
    models += [(f"P(O + O({k})) -> P1", cc.ProjectiveBundleModel(P1, cc.Bundle.trivial(P1, 1)
                                                               + cc.Bundle.line(P1, P1.gen("h") * k)))
               for k in range(5)]
    P2 = cc.projective_space(2)
    models.append(("P(O + O(1) + O(2)) -> P2", cc.ProjectiveBundleModel(
        P2, cc.Bundle.trivial(P2, 1) + cc.Bundle.line(P2, P2.gen("h")) + cc.Bundle.line(P2, P2.gen("h") * 2))))
    for name, m in models:
        pair = cc.class_level_atiyah_check(m)
        lhs_int, rhs_int = pair.integrals()
        am = cc.atiyah_meyer_chi(m.base, m.base_tangent_bundle(), m.hodge_collection())
        total = cc.ghrr(m.total_ring(), m.total_tangent())
        out.append(_check(f"class-level Atiyah-Meyer {name}", pair.holds and lhs_int == rhs_int == am == total,
                          f"lhs {pair.lhs}; rhs {pair.rhs}; genus {am}; total {total}"))

    # P(O + O) and P1 x P1 are the same space
    V = cc.Bundle.trivial(P1, 2)
    pb = cc.projective_bundle(P1, V)
    prod = cc.product_ring(P1, P1)
    xi = pb.gen("xi")
    h_pb = pb.gen("h")
    ok = True
    for a in range(2):
        for b in range(2):
            c_pb = cc.pushforward(pb, P1, "projective-bundle", h_pb ** a * xi ** b)
            c_pr = cc.pushforward(prod, P1, "product-projection", prod.gen("h1") ** a * prod.gen("h2") ** b)
            ok &= c_pb == c_pr
    out.append(_check("pushforward: P(O+O) agrees with P1 x P1", ok))

    for name, f, be, fe, mus in builtin_fibrations():
        total = rh.rh_total_chi_c(f, True)
        got = specialize_genus(total, "euler")
        want = rh.classical_euler_count(be, fe, mus, f.fiber_dim)
        out.append(_check(f"Riemann-Hurwitz Euler specialization: {name}", got == want, f"{got} vs {want}"))

    for n in range(7):
        R = cc.projective_space(n) if n else cc.point_ring()
        T = cc.tangent_bundle(R)
        out.append(_cmp(f"ghrr(P^{n}) = motivic chi_y", cc.ghrr(R, T), mv.chi_y(mv.proj_space(n))))
        out.append(_check(f"T_y(P^{n}) at y=-1 integrates to Euler number",
                          cc.to_genus(cc.hirzebruch_class(T).evaluate_y(-1).integrate()) == n + 1))
    return out


SUITES = {"paper-examples": paper_examples, "properties": properties, "cross-checks": cross_checks}


def run_suite(name: str, seed: int = 0) -> dict:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    checks = SUITES[name](seed=seed)
    failed = [c for c in checks if not c["ok"]]
    return {"suite": name, "seed": seed, "passed": len(checks) - len(failed), "failed": len(failed), "checks": checks}
