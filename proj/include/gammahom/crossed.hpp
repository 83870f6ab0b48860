#pragma once

#include <optional>

#include "gammahom/group.hpp"

namespace gammahom {

// A gamma-group G with an equivariant mu: G -> Gamma (conjugation action on
// Gamma) satisfying the Peiffer identity mu(g).g' = g g' g^{-1}.
struct CrossedGammaModule {
    GammaGroup gg;
    GroupHom mu;  // gg.g -> gg.gamma
};

struct CrossedViolation {
    std::string kind;
    unsigned g = 0, h = 0;
    std::string str() const;
};

std::optional<CrossedViolation> validate(const CrossedGammaModule& cm);

// Abelian gamma-module with trivial mu.
CrossedGammaModule make_trivial_crossed(const GammaGroup& gg);
// N normal in Gamma with the conjugation action and mu the inclusion.
CrossedGammaModule make_inclusion_crossed(const FiniteGroup& gamma, const Subgroup& n);
// (G, id) over Gamma = G with conjugation.
CrossedGammaModule make_conjugation_crossed(const FiniteGroup& g);

// A gamma-module A is crossed equivariant for (G, mu) when Im(mu) acts
// trivially; equivalently the action factors through Gamma/Im(mu) (verified).
bool is_crossed_equivariant_module(const CrossedGammaModule& cm, const GroupAction& a_action);

// 0 -> (A,1) -> (X,eta) -> (G,mu) -> 1.
struct CrossedExtension {
    CrossedGammaModule base;    // (G, mu)
    CrossedGammaModule middle;  // (X, eta)
    FiniteGroup kernel;         // A, abelian
    GroupAction kernel_action;  // Gamma on A
    GroupHom sigma;             // A -> X
    GroupHom tau;               // X -> G
    std::optional<std::vector<unsigned>> section;  // gamma-equivariant lift per G element
};

// Empty when valid; otherwise the itemized violations.
std::vector<std::string> validate_extension(const CrossedExtension& ext);

// Crossed-module morphism (G', mu') -> (G, mu): a gamma-map with mu f = mu'.
struct CrossedMorphism {
    CrossedGammaModule source, target;
    GroupHom f;
};

// Fiber product D = {(x, g') : tau(x) = f(g')} with delta(x, g') = eta(x);
// requires a gamma-section on ext and inherits one.
CrossedExtension pullback_extension(const CrossedExtension& ext, const CrossedMorphism& f);

// Pushforward along h: (A,1) -> (A',1): quotient of (A' x X) by the central
// image of a -> (h(a)^{-1}, sigma(a)).
CrossedExtension pushforward_extension(const CrossedExtension& ext, const GroupHom& h,
                                       const GroupAction& a2_action);

bool are_equivalent_crossed(const CrossedExtension& e1, const CrossedExtension& e2);

bool is_gamma_perfect_crossed(const CrossedGammaModule& cm);

}  // namespace gammahom
