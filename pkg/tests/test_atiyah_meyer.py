"""Families: Hodge-bundle formulas against genera of total spaces."""
import random

import pytest

import hodgegenus.charclass as cc
from hodgegenus.polycore import GenusPolynomial
from hodgegenus.verify import random_bundle, random_hodge_collection

P1, P2 = cc.projective_space(1), cc.projective_space(2)


def hirzebruch_surface(k):
    return cc.ProjectiveBundleModel(P1, cc.Bundle.trivial(P1, 1) + cc.Bundle.line(P1, P1.gen("h") * k))


@pytest.mark.parametrize("k", range(5))
def test_hirzebruch_surfaces(k, y):
    m = hirzebruch_surface(k)
    pair = cc.class_level_atiyah_check(m)
    assert pair.holds
    total = cc.ghrr(m.total_ring(), m.total_tangent())
    assert total == (1 - y) ** 2
    assert pair.integrals() == (total, total)
    assert cc.atiyah_meyer_chi(P1, m.base_tangent_bundle(), m.hodge_collection()) == total


@pytest.mark.parametrize("base,fiber", [(P1, P1), (P1, P2), (P2, P1), (P2, cc.projective_space(3))])
def test_products(base, fiber):
    m = cc.ProductModel(base, fiber)
    pair = cc.class_level_atiyah_check(m)
    assert pair.holds
    chi_B = cc.ghrr(base, cc.tangent_bundle(base))
    chi_F = cc.ghrr(fiber, cc.tangent_bundle(fiber))
    assert pair.integrals()[0] == chi_B * chi_F == cc.ghrr(m.total_ring(), m.total_tangent())


def test_product_with_explicit_hodge_numbers(y):
    m = cc.ProductModel(P1, P1, fiber_hodge={(0, 0): 1, (1, 1): 1})
    assert m.hodge_collection().rank_polynomial() == 1 - y
    assert cc.class_level_atiyah_check(m).holds


def test_projective_bundle_over_plane(y):
    V = cc.Bundle.trivial(P2, 1) + cc.Bundle.line(P2, P2.gen("h")) + cc.Bundle.line(P2, P2.gen("h") * -2)
    m = cc.ProjectiveBundleModel(P2, V)
    pair = cc.class_level_atiyah_check(m)
    assert pair.holds
    assert pair.integrals()[0] == (1 - y + y ** 2) ** 2


def test_tangent_of_projective_bundle_euler():
    # Euler number of P(V) over P^2 with rank 3 is 3 * 3
    V = cc.Bundle.trivial(P2, 1) + cc.Bundle.line(P2, P2.gen("h") * 2) + cc.Bundle.line(P2, P2.gen("h"))
    E = cc.projective_bundle(P2, V)
    T = cc.tangent_bundle(E)
    assert T.rank == 4
    assert T.c(4).integrate().numerator(0) == 9


def test_relative_tangent_rank():
    V = cc.Bundle.trivial(P1, 1) + cc.Bundle.line(P1, P1.gen("h") * 3)
    E = cc.projective_bundle(P1, V)
    Tf = cc.relative_tangent(E)
    assert Tf.rank == 1
    # c_1(T_f) pushes forward to the rank-2 Euler number of the fibre
    assert cc.pushforward(E, P1, "projective-bundle", Tf.c(1)) == P1.one() * 2


def test_flat_collapse_and_degree_zero():
    rng = random.Random(2)
    for _ in range(30):
        ring = rng.choice([P1, P2, cc.product_ring(P1, P1)])
        T = cc.tangent_bundle(ring)
        flat = random_hodge_collection(rng, ring, flat=True)
        chi_B = cc.ghrr(ring, T)
        for mode in ("pq", "graded"):
            assert cc.atiyah_meyer_chi(ring, T, flat, mode) == chi_B * flat.rank_polynomial(mode)
            ch = cc.k_theory_chi_y_character(flat, ring, mode)
            assert ch == ring.one() * cc.ClassPolynomial(ring, {(e, 0): c for e, c in flat.rank_polynomial(mode).items()})
        curved = random_hodge_collection(rng, ring)
        ch0 = cc.k_theory_chi_y_character(curved, ring).degree_part(0)
        assert ch0 == cc.ClassPolynomial(ring, {(e, 0): c for e, c in curved.rank_polynomial().items()})


def test_meyer_routes_agree_random():
    rng = random.Random(4)
    for _ in range(40):
        ring = rng.choice([P1, P2, cc.product_ring(P1, P1), cc.projective_space(3)])
        T = cc.tangent_bundle(ring)
        hodge = cc.HodgeBundleCollection({(p, 0): random_bundle(rng, ring, rng.randint(1, 2))
                                          for p in range(rng.randint(1, 3))})
        a = cc.meyer_twisted(ring, T, hodge)
        assert a == cc.meyer_twisted_normalized(ring, T, hodge)
        assert isinstance(a, GenusPolynomial) and a.is_integral()


def test_modes_differ_only_by_sign_convention(y):
    R = P1
    T = cc.tangent_bundle(R)
    # type (1,0) in pq mode is Gr^1 in degree 1 of graded mode: both give -y
    pq = cc.HodgeBundleCollection.trivial(R, {(1, 0): 1})
    graded = cc.HodgeBundleCollection.trivial(R, {(1, 1): 1})
    assert pq.rank_polynomial("pq") == graded.rank_polynomial("graded") == y
    assert cc.atiyah_meyer_chi(R, T, pq, "pq") == cc.atiyah_meyer_chi(R, T, graded, "graded")


def test_unknown_mode():
    with pytest.raises(ValueError):
        cc.k_theory_chi_y_character(cc.HodgeBundleCollection.trivial(P1, {(0, 0): 1}), P1, "qp")
