"""Hirzebruch surfaces F_k = P(O + O(k)) over P^1.

Every F_k has chi_y = (1 - y)^2, whatever k is.  We get this three ways:
integrating the Hirzebruch class of the total space, the Atiyah-Meyer
formula on the base, and the class-level identity pushed down to P^1.
"""
import hodgegenus.charclass as cc

P1 = cc.projective_space(1)
h = P1.gen("h")

for k in range(5):
    model = cc.ProjectiveBundleModel(P1, cc.Bundle.trivial(P1, 1) + cc.Bundle.line(P1, h * k))
    total = cc.ghrr(model.total_ring(), model.total_tangent())
    am = cc.atiyah_meyer_chi(P1, model.base_tangent_bundle(), model.hodge_collection())
    pair = cc.class_level_atiyah_check(model)
    print(f"F_{k}:  chi_y = {total}   Atiyah-Meyer = {am}   class-level holds = {pair.holds}")

# The pushed-forward class itself, not just its integral.
pair = cc.class_level_atiyah_check(cc.ProjectiveBundleModel(P1, cc.Bundle.trivial(P1, 1) + cc.Bundle.line(P1, h * 3)))
print("\nf_* T_y(F_3)          =", pair.lhs)
print("ch(chi_y(f)) T_y(P^1) =", pair.rhs)

# y = -1, 0, 1 recover Euler number, arithmetic genus and signature.
T = cc.tangent_bundle(cc.projective_bundle(P1, cc.Bundle.trivial(P1, 1) + cc.Bundle.line(P1, h * 2)))
genus = cc.ghrr(T.ring, T)
print("\nF_2 specializations: euler", genus(-1), " arithmetic", genus(0), " signature", genus(1))
