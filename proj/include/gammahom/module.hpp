#pragma once

#include <optional>

#include "gammahom/abelian.hpp"
#include "gammahom/group.hpp"

namespace gammahom {

// A G x| Gamma module: finitely presented abelian group with commuting-
// compatible actions of G and Gamma by integer matrices on generators.
struct EquivariantModule {
    GammaGroup gg;
    FPAbelianGroup base;
    std::vector<IntMat> g_action;      // one matrix per element of G
    std::vector<IntMat> gamma_action;  // one matrix per element of Gamma

    const IntMat& act_g(unsigned g) const { return g_action[g]; }
    const IntMat& act_gamma(unsigned c) const { return gamma_action[c]; }
};

struct ModuleViolation {
    std::string kind;  // which axiom failed
    unsigned gamma = 0, g = 0;
    std::size_t generator = 0;
    std::string str() const;
};

// First violated axiom, or nullopt when the module satisfies all of them:
// every action matrix an automorphism, both representation laws, and the
// compatibility gamma(g.a) = (gamma g).(gamma a).
std::optional<ModuleViolation> validate(const EquivariantModule& m);

EquivariantModule make_trivial_module(const GammaGroup& gg, const FPAbelianGroup& base);
// Z with the trivial action of everything.
EquivariantModule make_trivial_z(const GammaGroup& gg);
EquivariantModule make_trivial_cyclic(const GammaGroup& gg, const Int& m);

// Z(G): rank |G|, G by left translation, gamma by permutation of the basis.
EquivariantModule group_ring_module(const GammaGroup& gg);

// I(G) = ker(Z(G) -> Z): rank |G|-1 with basis g - e over g != e.
EquivariantModule augmentation_ideal(const GammaGroup& gg);

// A_Gamma with the projection from A.
QuotientPresentation gamma_coinvariants(const EquivariantModule& m);
// A^Gamma with the inclusion into A.
SubgroupPresentation gamma_invariants(const EquivariantModule& m);
// A_{G x| Gamma}.
FPAbelianGroup full_coinvariants(const EquivariantModule& m);

// (M ox A) / <x.m ox x.a - m ox a> over x in G and Gamma (diagonal coinvariants,
// the tensor over the semidirect-product group ring).
FPAbelianGroup tensor_over_semidirect(const EquivariantModule& m1, const EquivariantModule& m2);

bool has_trivial_actions(const EquivariantModule& m);  // both actions identity as maps

}  // namespace gammahom
