"""Genera of MHS dimension tables."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgegenus.errors import ValidationError
from hodgegenus.hodgestruct import (
    MixedHodgeComplex,
    PureHodgeStructure,
    chi_y_of_complex,
    e_polynomial_of_complex,
    poincare_dual,
    specialize_genus,
)
from hodgegenus.polycore import EPolynomial, GenusPolynomial, specialize_e

CUSP_FIBRE = MixedHodgeComplex({(0, 0, 0): 1, (1, 1, 0): 1, (1, 0, 1): 1})

tables = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 3), st.integers(0, 3)), st.integers(0, 5), max_size=6
).map(MixedHodgeComplex)


def test_cusp_milnor_fibre(y):
    assert chi_y_of_complex(CUSP_FIBRE) == y
    assert e_polynomial_of_complex(CUSP_FIBRE) == EPolynomial({(0, 0): 1, (1, 0): -1, (0, 1): -1})


def test_empty_table():
    assert chi_y_of_complex(MixedHodgeComplex()) == GenusPolynomial()
    assert e_polynomial_of_complex(MixedHodgeComplex()) == EPolynomial()


@pytest.mark.parametrize("p", range(5))
def test_tate_class(p, y):
    assert chi_y_of_complex(MixedHodgeComplex({(0, p, p): 1})) == (-y) ** p


def test_projective_line_table():
    K = MixedHodgeComplex({(0, 0, 0): 1, (2, 1, 1): 1})
    assert e_polynomial_of_complex(K) == 1 + EPolynomial.uv()


def test_negative_dimensions_rejected():
    with pytest.raises(ValidationError):
        MixedHodgeComplex({(0, 0, 0): -1})


def test_sentinel_q_has_genus_but_no_epolynomial(y):
    K = MixedHodgeComplex({(1, 1): 2})
    assert chi_y_of_complex(K) == 2 * y
    with pytest.raises(ValidationError):
        e_polynomial_of_complex(K)


def test_shift_negates(y):
    K = MixedHodgeComplex({(0, 1, 1): 3})
    assert chi_y_of_complex(K.shifted(1)) == -chi_y_of_complex(K)
    assert chi_y_of_complex(K.shifted(-2)) == chi_y_of_complex(K)


def test_poincare_dual_examples(y):
    assert poincare_dual(1 + y, 1) == -y - 1
    assert poincare_dual(y, 1) == GenusPolynomial.constant(-1)
    assert poincare_dual(GenusPolynomial(), 3) == GenusPolynomial()


def test_specializations(y):
    assert specialize_genus(1 - y + y ** 2, "signature") == 1
    assert specialize_genus(1 - y, "euler") == 2
    assert specialize_genus(1 - y + y ** 2, "arithmetic") == 1
    for at in ("euler", "arithmetic", "signature"):
        assert specialize_genus(GenusPolynomial(), at) == 0


@settings(max_examples=100, deadline=None)
@given(st.dictionaries(st.integers(-3, 6), st.integers(-9, 9), max_size=5).map(GenusPolynomial), st.integers(0, 6))
def test_duality_is_an_involution(P, n):
    assert poincare_dual(poincare_dual(P, n), n) == P


@settings(max_examples=100, deadline=None)
@given(tables, tables)
def test_additivity_and_consistency(K1, K2):
    assert chi_y_of_complex(K1 + K2) == chi_y_of_complex(K1) + chi_y_of_complex(K2)
    assert chi_y_of_complex(K1) == specialize_e(e_polynomial_of_complex(K1), "chi_y")


def test_pure_structure(y):
    curve = PureHodgeStructure(1, {(1, 0): 2, (0, 1): 2}, polarized_real=True)
    assert curve.chi_y() == 2 - 2 * y
    assert isinstance(specialize_genus(curve.chi_y(), "signature"), int)
    with pytest.raises(ValidationError):
        PureHodgeStructure(1, {(1, 0): 1, (0, 1): 2}, polarized_real=True)
    with pytest.raises(ValidationError):
        PureHodgeStructure(2, {(1, 0): 1})


def test_json_round_trip():
    assert MixedHodgeComplex.from_json(CUSP_FIBRE.to_json()) == CUSP_FIBRE
