"""Exact Hodge-theoretic genera of complex algebraic varieties.

The modules mirror the layers of the theory:

* :mod:`~hodgegenus.polycore`: Laurent, E- and (1+y)-rational polynomials
* :mod:`~hodgegenus.hodgestruct`: MHS dimension tables and their genera
* :mod:`~hodgegenus.motivic`: classes in the Grothendieck ring of varieties
* :mod:`~hodgegenus.stratmaps`: stratified multiplicativity of chi_y^c
* :mod:`~hodgegenus.rhcurve`: Riemann-Hurwitz for maps onto curves
* :mod:`~hodgegenus.charclass`: Chern/Todd/Hirzebruch calculus, Atiyah-Meyer
"""
from .errors import (
    HodgeError,
    InconsistencyError,
    MonodromyError,
    StrataCycleError,
    UnsoundOperationError,
    ValidationError,
    VanishingSupportError,
)
from .hodgestruct import (
    MixedHodgeComplex,
    PureHodgeStructure,
    chi_y_of_complex,
    e_polynomial_of_complex,
    poincare_dual,
    specialize_genus,
)
from .motivic import (
    VarietyClass,
    affine_line,
    atom,
    blowup_class,
    chi_y,
    chi_y_c,
    e_polynomial,
    point,
    product_genus_check,
    proj_space,
    torus,
)
from .polycore import EPolynomial, GenusPolynomial, LaurentPolynomial, YRational, poly_arith, specialize_e

__version__ = "0.1.0"
