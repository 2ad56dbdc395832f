"""Cohomology rings, characteristic classes and Riemann-Roch type formulas."""
from .classes import Bundle, ClassPolynomial, HodgeBundleCollection, to_genus
from .formulas import *  # noqa: F401,F403
from .formulas import __all__ as _formulas_all
from .genera import (
    chern_character,
    genus_from_series,
    hirzebruch_class,
    lambda_y_class,
    power_sums,
    todd_class,
)
from .rings import CohomRing, custom_ring, point_ring, product_ring, projective_bundle, projective_space

__all__ = [
    "Bundle",
    "ClassPolynomial",
    "HodgeBundleCollection",
    "to_genus",
    "chern_character",
    "genus_from_series",
    "hirzebruch_class",
    "lambda_y_class",
    "power_sums",
    "todd_class",
    "CohomRing",
    "custom_ring",
    "point_ring",
    "product_ring",
    "projective_bundle",
    "projective_space",
    *_formulas_all,
]
