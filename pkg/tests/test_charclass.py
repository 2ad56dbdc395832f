"""Cohomology rings and multiplicative classes against sympy series."""
import random
from fractions import Fraction

import pytest
import sympy as sp

import hodgegenus.charclass as cc
from hodgegenus.charclass.genera import hirzebruch_series, lambda_series, todd_series
from hodgegenus.errors import InconsistencyError, ValidationError
from hodgegenus.polycore import LaurentPolynomial, YRational
from hodgegenus.verify import random_bundle, random_ring, tanh_series

from oracles import (
    L_SERIES,
    TODD,
    class_to_sympy,
    hirzebruch_expr,
    series_coefficients,
    split_class_on_pn,
    y as Y,
)


def line_sum(ring, degrees):
    h = ring.gen("h")
    E = cc.Bundle.trivial(ring, 0)
    for d in degrees:
        E = E + cc.Bundle.line(ring, h * d)
    return E


def to_sym(q):
    q = YRational.coerce(q)
    num = sum(sp.Rational(c.numerator, c.denominator) * Y ** e for e, c in q.numerator.items())
    return sp.simplify(num / (1 + Y) ** q.den_power)


# -- rings ----------------------------------------------------------------------

@pytest.mark.parametrize("ring", [
    cc.point_ring(), cc.projective_space(3),
    cc.product_ring(cc.projective_space(1), cc.projective_space(2)),
    cc.projective_bundle(cc.projective_space(2), cc.Bundle.trivial(cc.projective_space(2), 3)),
], ids=["point", "P3", "P1xP2", "PV"])
def test_rings_validate(ring):
    ring.validate()


def test_projective_space_ring():
    R = cc.projective_space(4)
    h = R.gen("h")
    assert (h ** 4).integrate() == YRational(1)
    assert (h ** 5).is_zero()
    assert R.top_degree == 4
    with pytest.raises(ValidationError):
        cc.projective_space(-1)


def test_product_ring_integral():
    R = cc.product_ring(cc.projective_space(1), cc.projective_space(2))
    assert (R.gen("h1") * R.gen("h2") ** 2).integrate() == YRational(1)
    assert (R.gen("h2") ** 3).is_zero()


def test_projective_bundle_relation():
    base = cc.projective_space(1)
    V = cc.Bundle.trivial(base, 1) + cc.Bundle.line(base, base.gen("h") * 3)
    R = cc.projective_bundle(base, V)
    xi, h = R.gen("xi"), R.gen("h")
    # xi^2 + c1 xi = 0 with c1 = 3h
    assert xi ** 2 + xi * h * 3 == R.zero()
    assert (xi * h).integrate() == YRational(1)


def test_custom_ring_checks():
    good = cc.custom_ring(["1", "a", "b", "ab"], [0, 1, 1, 2],
                          {("a", "b"): {"ab": 1}, ("a", "a"): {}, ("b", "b"): {}}, "ab")
    assert good.top_degree == 2
    with pytest.raises(ValidationError, match="grading"):
        cc.custom_ring(["1", "a", "b"], [0, 1, 2], {("a", "a"): {"a": 1}}, "b")
    with pytest.raises(ValidationError, match="unknown"):
        cc.custom_ring(["1", "a"], [0, 1], {("a", "a"): {"z": 1}}, "a")


# -- series against sympy ---------------------------------------------------------

def test_todd_series():
    assert [sp.Rational(c.numerator, c.denominator) for c in todd_series(8)] == series_coefficients(TODD, 8)


@pytest.mark.parametrize("normalized", [False, True])
def test_hirzebruch_series(normalized):
    want = series_coefficients(hirzebruch_expr(normalized), 6)
    got = [to_sym(c) for c in hirzebruch_series(6, normalized)]
    assert all(sp.simplify(g - w) == 0 for g, w in zip(got, want))


def test_lambda_series():
    want = series_coefficients(1 + Y * sp.exp(sp.Symbol("a")), 5)
    assert all(sp.simplify(to_sym(g) - w) == 0 for g, w in zip(lambda_series(5), want))


def test_tanh_series():
    # a / tanh(a/2) at a -> 2a is 2a / tanh(a)
    want = series_coefficients(L_SERIES, 8)
    got = [c * 2 ** k / 2 for k, c in enumerate(tanh_series(8))]
    assert [sp.Rational(c.numerator, c.denominator) for c in got] == want


@pytest.mark.parametrize("n,degrees", [(2, [3]), (3, [1, 1, 1, 1]), (4, [2, -1]), (5, [1, 2, -3]), (6, [1] * 7)])
@pytest.mark.parametrize("which", ["todd", "hirzebruch", "normalized", "lambda"])
def test_split_classes_on_pn(n, degrees, which):
    R = cc.projective_space(n)
    E = line_sum(R, degrees)
    got, expr = {
        "todd": (cc.todd_class(E), TODD),
        "hirzebruch": (cc.hirzebruch_class(E), hirzebruch_expr()),
        "normalized": (cc.hirzebruch_class(E, normalized=True), hirzebruch_expr(True)),
        "lambda": (cc.lambda_y_class(E), 1 + Y * sp.exp(sp.Symbol("a"))),
    }[which]
    want = split_class_on_pn(expr, degrees, n)
    assert sp.simplify(class_to_sympy(got) - want) == 0


# -- structural properties ----------------------------------------------------------

def test_whitney_and_factorization():
    rng = random.Random(11)
    for _ in range(25):
        R = random_ring(rng)
        E, F = random_bundle(rng, R), random_bundle(rng, R)
        for fn in (cc.todd_class, cc.hirzebruch_class, cc.lambda_y_class):
            assert fn(E + F) == fn(E) * fn(F)
        cc.hirzebruch_class(E, check=True)
        assert cc.chern_character(E + F) == cc.chern_character(E) + cc.chern_character(F)


def test_chern_character_of_line():
    R = cc.projective_space(3)
    h = R.gen("h")
    L = cc.Bundle.line(R, h * 2)
    assert cc.chern_character(L) == R.one() + h * 2 + h ** 2 * 2 + h ** 3 * Fraction(4, 3)
    assert cc.power_sums(L)[2] == h ** 2 * 4


def test_chern_character_scaled():
    R = cc.projective_space(2)
    h = R.gen("h")
    L = cc.Bundle.line(R, h)
    one_y = YRational(1 + LaurentPolynomial.y())
    assert cc.chern_character(L, one_y) == R.one() + h * one_y + h ** 2 * (one_y ** 2 / 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_specializations(n):
    R = cc.projective_space(n)
    T = cc.tangent_bundle(R)
    assert cc.hirzebruch_class(T).evaluate_y(0) == cc.todd_class(T)
    assert cc.hirzebruch_class(T, normalized=True).evaluate_y(0) == cc.todd_class(T)
    assert cc.hirzebruch_class(T).evaluate_y(-1).integrate() == YRational(n + 1)
    L = split_class_on_pn(L_SERIES, [1] * (n + 1), n)
    assert sp.simplify(class_to_sympy(cc.hirzebruch_class(T, normalized=True).evaluate_y(1)) - L) == 0


def test_tangent_bundles():
    R = cc.projective_space(2)
    assert cc.tangent_bundle(R).total_chern() == (R.one() + R.gen("h")) ** 3
    assert cc.tangent_bundle(cc.point_ring()).rank == 0
    custom = cc.custom_ring(["1", "a"], [0, 1], {("a", "a"): {}}, "a")
    with pytest.raises(ValidationError):
        cc.tangent_bundle(custom)


def test_bundle_validation():
    R = cc.projective_space(2)
    h = R.gen("h")
    with pytest.raises(ValidationError, match="homogeneous"):
        cc.Bundle(R, 2, (h + R.one(),))
    with pytest.raises(ValidationError, match="rank"):
        cc.Bundle(R, 1, (h, h ** 2))
    with pytest.raises(ValidationError):
        cc.Bundle(R, -1)


def test_twist_and_dual():
    R = cc.projective_space(3)
    h = R.gen("h")
    E = line_sum(R, [1, 2])
    assert E.twist(cc.Bundle.line(R, h)).total_chern() == line_sum(R, [2, 3]).total_chern()
    assert E.dual().total_chern() == line_sum(R, [-1, -2]).total_chern()


def test_segre_inverts_chern():
    rng = random.Random(3)
    for _ in range(20):
        R = random_ring(rng)
        V = random_bundle(rng, R, rng.randint(1, 3))
        s = sum(cc.segre_classes(V), R.zero())
        assert s * V.total_chern() == R.one()


def test_pushforward_normalization():
    base = cc.projective_space(2)
    h = base.gen("h")
    for V in (cc.Bundle.trivial(base, 3), line_sum(base, [0, 1, 3])):
        E = cc.projective_bundle(base, V)
        xi = E.gen("xi")
        assert cc.pushforward(E, base, "projective-bundle", xi ** 2) == base.one()
        assert cc.pushforward(E, base, "projective-bundle", xi).is_zero()
        # f_* xi^(r-1+i) is the i-th Segre class
        segre = cc.segre_classes(V)
        for i in range(1, 3):
            assert cc.pushforward(E, base, "projective-bundle", xi ** (2 + i)) == segre[i]
        assert cc.pushforward(E, base, "projective-bundle", cc.pullback_from_base(E, h) * xi ** 2) == h
    P = cc.product_ring(base, cc.projective_space(1))
    assert cc.pushforward(P, base, "product-projection", P.gen("h2")) == base.one()
    assert cc.pushforward(P, base, "product-projection", P.gen("h1")).is_zero()


def test_pushforward_projection_formula_and_integrals():
    rng = random.Random(8)
    base = cc.projective_space(2)
    for _ in range(10):
        V = random_bundle(rng, base, rng.randint(1, 3))
        E = cc.projective_bundle(base, V)
        cls = sum((E.basis_element(i) * rng.randint(-3, 3) for i in range(len(E.labels))), E.zero())
        pushed = cc.pushforward(E, base, "projective-bundle", cls)
        assert pushed.integrate() == cls.integrate()


def test_pushforward_bad_kind():
    base = cc.projective_space(1)
    with pytest.raises(ValidationError):
        cc.pushforward(cc.product_ring(base, base), base, "sideways", base.one())


# -- genus formulas -----------------------------------------------------------------

def test_ghrr_line_bundles_pn():
    from oracles import euler_char_line_pn

    for n in range(1, 5):
        R = cc.projective_space(n)
        T = cc.tangent_bundle(R)
        for d in range(-4, 5):
            chi = cc.ghrr(R, T, cc.Bundle.line(R, R.gen("h") * d))
            assert chi(0) == euler_char_line_pn(n, d)


def test_higher_chi_y_point_class(y):
    R = cc.projective_space(1)
    assert cc.higher_chi_y(R, cc.tangent_bundle(R), R.gen("h")) == 1 + y
    assert cc.higher_chi_y(R, cc.tangent_bundle(R), R.one()) == 1 - y


@pytest.mark.parametrize("d", range(-4, 6))
def test_meyer_line_bundle_p1(d, y):
    # chi_y(P^1, O(d)) = chi(O(d)) + y chi(Omega^1(d)) = (d+1) + y (d-1)
    R = cc.projective_space(1)
    T = cc.tangent_bundle(R)
    hodge = cc.HodgeBundleCollection({(0, 0): cc.Bundle.line(R, R.gen("h") * d)})
    want = (d + 1) + (d - 1) * y
    assert cc.meyer_twisted(R, T, hodge) == want
    assert cc.meyer_twisted_normalized(R, T, hodge) == want
    assert cc.to_genus(cc.class_level_meyer(R, T, hodge).integrate()) == want


def test_to_genus_rejects_denominators():
    with pytest.raises(InconsistencyError):
        cc.to_genus(YRational(1, 1))
    with pytest.raises(InconsistencyError):
        cc.to_genus(YRational(Fraction(1, 2)))


def test_log_genus(y):
    R = cc.projective_space(1)
    T = cc.tangent_bundle(R)
    h = R.gen("h")
    # Omega^1(log D) = O(-2 + #D)
    assert cc.log_chi_y(R, T, cc.Bundle.line(R, h * -2)) == 1 - y
    assert cc.log_chi_y(R, T, cc.Bundle.line(R, -h)) == 1
    assert cc.log_chi_y(R, T, cc.Bundle.trivial(R, 1)) == 1 + y
    assert cc.log_chi_y(R, T, [cc.Bundle.trivial(R, 1), cc.Bundle.line(R, -h)]) == 1


def test_normalized_series_from_definition():
    A = sp.Symbol("a")
    b = A * (1 + Y)
    direct = sp.series(b * (1 + Y * sp.exp(-b)) / (1 - sp.exp(-b)) / (1 + Y), A, 0, 4).removeO()
    got = hirzebruch_series(3, True)
    assert all(sp.simplify(direct.coeff(A, k) - to_sym(got[k])) == 0 for k in range(4))


def test_degree_cap(monkeypatch):
    monkeypatch.setenv("HODGE_MAX_DEGREE", "3")
    cc.projective_space(3)
    with pytest.raises(ValidationError, match="HODGE_MAX_DEGREE"):
        cc.projective_space(5)
    with pytest.raises(ValidationError, match="HODGE_MAX_DEGREE"):
        cc.product_ring(cc.projective_space(2), cc.projective_space(2))
