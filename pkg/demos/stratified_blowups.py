"""Blow-ups as stratified maps, and where multiplicativity fails.

A blow-down X~ -> X is an isomorphism off the centre Y and has fibre P^r
over it, so the stratified formula gives chi(X) + chi(Y)(chi(P^r) - 1).
"""
from hodgegenus.hodgestruct import MixedHodgeComplex, chi_y_of_complex
from hodgegenus.motivic import affine_line, blowup_class, chi_y, chi_y_c, point, proj_space, torus
from hodgegenus.polycore import GenusPolynomial
from hodgegenus.stratmaps import StratifiedMapDescriptor, Stratum, stratified_report

one = GenusPolynomial.constant(1)
for X, Y, r, name in [(proj_space(2), point(), 1, "P^2 at a point"),
                      (proj_space(3), proj_space(1), 1, "P^3 along a line"),
                      (proj_space(3), point(), 2, "P^3 at a point")]:
    d = StratifiedMapDescriptor([
        Stratum("open", one, closure_genus=chi_y_c(X), monodromy_trivial=True),
        Stratum("centre", chi_y_c(proj_space(r)), closure_genus=chi_y_c(Y), monodromy_trivial=True),
    ], "open")
    rep = stratified_report(d)
    print(f"{name:18s} stratified {rep['total']}   motivic {chi_y_c(blowup_class(X, Y, r))}")

# The cusp x^3 = y^2: its Milnor fibration over C^* is not multiplicative for chi_y.
F = MixedHodgeComplex({(0, 0, 0): 1, (1, 1, 0): 1, (1, 0, 1): 1})
E = (affine_line() ** 2 - affine_line()).declare(smooth=True, dim=2)
print("\nchi_y(E) =", chi_y(E), "  chi_y(C^*) chi_y(F) =", chi_y(torus()) * chi_y_of_complex(F))
