"""A pencil of conics through four general points of P^2.

Blowing up the base points gives X = Bl_4 P^2 -> P^1 with fibre P^1 and
three nodal fibres (pairs of lines).  The correction at each node is the
vanishing cohomology, a single class of type (1,1) in degree 1.
"""
from hodgegenus.errors import UnsoundOperationError
from hodgegenus.hodgestruct import MixedHodgeComplex, specialize_genus
from hodgegenus.motivic import blowup_class, chi_y_c, point, proj_space
from hodgegenus.rhcurve import (CurveFibration, Isolated, Vanishing, classical_euler_count, rh_total_chi_c,
                                rh_total_e_polynomial, special_fiber_chi)

node = MixedHodgeComplex({(1, 1, 1): 1}, label="node")
P1 = chi_y_c(proj_space(1))

print("special fibre:", special_fiber_chi(Vanishing(node, 0), P1, 1), "(two lines through a point)")

pencil = CurveFibration(P1, P1, total_dim=2, critical=[Isolated([node])] * 3)
total = rh_total_chi_c(pencil, assume_trivial_monodromy=True)

X = proj_space(2)
for _ in range(4):
    X = blowup_class(X, point(), 1)
print("Riemann-Hurwitz:", total)
print("blow-up formula:", chi_y_c(X))
print("Euler number:", specialize_genus(total, "euler"), "=", classical_euler_count(2, 2, [1, 1, 1], 1))

# Weights of the limit mixed Hodge structure move, so there is no E-polynomial version.
try:
    rh_total_e_polynomial(pencil)
except UnsoundOperationError as exc:
    print("E-polynomial refused:", exc)
