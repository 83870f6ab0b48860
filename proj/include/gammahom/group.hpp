#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gammahom/errors.hpp"

namespace gammahom {

// A finite group as a validated multiplication table on indices 0..n-1.
class FiniteGroup {
public:
    // Validates associativity, identity and two-sided inverses; throws
    // input_error naming the first failure.
    explicit FiniteGroup(std::vector<std::vector<unsigned>> table,
                         std::vector<std::string> names = {});

    std::size_t order() const { return n_; }
    unsigned mul(unsigned a, unsigned b) const { return table_[a][b]; }
    unsigned inv(unsigned a) const { return inv_[a]; }
    unsigned identity() const { return e_; }
    unsigned conjugate(unsigned x, unsigned g) const { return mul(mul(x, g), inv(x)); }  // x g x^{-1}

    unsigned element_order(unsigned a) const;
    bool is_abelian() const;
    const std::string& name(unsigned a) const { return names_[a]; }

    bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

private:
    std::size_t n_;
    std::vector<std::vector<unsigned>> table_;
    std::vector<unsigned> inv_;
    unsigned e_;
    std::vector<std::string> names_;
};

FiniteGroup make_cyclic(std::size_t m);
FiniteGroup make_symmetric(unsigned n);           // S_n, n <= 6
FiniteGroup make_dihedral(unsigned n);            // order 2n, n >= 1
FiniteGroup make_from_table(const std::vector<std::vector<unsigned>>& table);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup make_klein_four();

struct GroupHom {
    FiniteGroup source, target;
    std::vector<unsigned> images;  // per source element

    GroupHom(FiniteGroup src, FiniteGroup tgt, std::vector<unsigned> imgs);
    unsigned operator()(unsigned x) const { return images[x]; }
    bool is_injective() const;
    bool is_surjective() const;
};

// Action of gamma on target by automorphisms, stored as one permutation per
// gamma element.
struct GroupAction {
    FiniteGroup gamma, target;
    std::vector<std::vector<unsigned>> act;  // act[g][x]

    GroupAction(FiniteGroup gamma_, FiniteGroup target_, std::vector<std::vector<unsigned>> act_);
    static GroupAction trivial(const FiniteGroup& gamma_, const FiniteGroup& target_);
    // Z_m with gamma cyclic of order k-multiplicative-order acting by x -> k x.
    unsigned operator()(unsigned g, unsigned x) const { return act[g][x]; }
    bool is_trivial() const;
};

struct GammaGroup {
    FiniteGroup g, gamma;
    GroupAction action;

    GammaGroup(FiniteGroup g_, FiniteGroup gamma_, GroupAction action_);
    static GammaGroup with_trivial_action(const FiniteGroup& g_, const FiniteGroup& gamma_);
    unsigned act(unsigned gam, unsigned x) const { return action(gam, x); }
};

// G = Z_m with Gamma acting through exponents k(gamma) coprime to m.
GammaGroup cyclic_with_power_action(std::size_t m, const FiniteGroup& gamma,
                                    const std::vector<unsigned>& k);
// Convenience: Gamma = Z_2 acting on Z_m by inversion.
GammaGroup cyclic_with_inversion(std::size_t m);

struct Subgroup {
    FiniteGroup parent;
    std::vector<unsigned> members;  // sorted

    Subgroup(FiniteGroup parent_, std::vector<unsigned> members_);
    std::size_t order() const { return members.size(); }
    bool contains(unsigned x) const;
    bool is_normal() const;
    bool is_whole_group() const { return members.size() == parent.order(); }
};

Subgroup closure(const FiniteGroup& g, std::vector<unsigned> generators);
Subgroup normal_closure(const FiniteGroup& g, const std::vector<unsigned>& generators);
Subgroup center(const FiniteGroup& g);
Subgroup commutator_subgroup(const FiniteGroup& g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// [G,G]_Gamma: generated by commutators together with gamma(g) g^{-1}.
Subgroup gamma_commutant(const GammaGroup& gg);
// Gamma G: normal closure of { gamma(g) g^{-1} }.
Subgroup gamma_subgroup(const GammaGroup& gg);
// [G,H]_Gamma: generated by x gamma(y) x^{-1} y^{-1}, y in H; H must be normal.
Subgroup relative_commutator(const GammaGroup& gg, const Subgroup& h);

bool is_gamma_perfect(const GammaGroup& gg);
bool is_gamma_stable(const GammaGroup& gg, const Subgroup& s);

struct QuotientGroup {
    FiniteGroup group;
    GroupHom projection;
    std::vector<unsigned> coset_rep;  // representative element per quotient element
};
QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n);

// (G x| Gamma, injection of G, injection of Gamma); (g,c)(g',c') = (g * c(g'), cc').
struct SemidirectProduct {
    FiniteGroup group;
    GroupHom inject_g, inject_gamma;
    std::vector<unsigned> g_part, gamma_part;  // component projections per element
};
SemidirectProduct semidirect_product(const GammaGroup& gg);

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& tgt,
                     const std::vector<unsigned>& images);
bool is_gamma_map(const GroupHom& f, const GroupAction& src_action, const GroupAction& tgt_action);

// Brute-force isomorphism search over generator images; meant for order <= 24.
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b);

// Small generating sequence found greedily.
std::vector<unsigned> generating_set(const FiniteGroup& g);

// Extends images of the given generators to a full homomorphism by closing
// under products; nullopt when inconsistent or the set does not generate.
std::optional<std::vector<unsigned>> extend_generator_images(const FiniteGroup& src,
                                                             const FiniteGroup& tgt,
                                                             const std::vector<unsigned>& gens,
                                                             const std::vector<unsigned>& imgs);

// The subgroup as a group in its own right; element i is s.members[i].
FiniteGroup subgroup_as_group(const Subgroup& s);

}  // namespace gammahom
