#pragma once

#include <map>
#include <optional>
#include <random>

#include "gammahom/bar.hpp"

namespace gammahom {

// Elementwise view of a finite equivariant module: canonical element indices,
// addition, and the group/gamma actions as permutations of elements.
class FiniteModuleView {
public:
    explicit FiniteModuleView(EquivariantModule mod, std::size_t max_size = 4096);

    std::size_t size() const { return elements_.size(); }
    unsigned zero() const { return zero_; }
    unsigned add(unsigned a, unsigned b) const { return add_[a][b]; }
    unsigned neg(unsigned a) const { return neg_[a]; }
    unsigned act_g(unsigned g, unsigned a) const { return g_act_[g][a]; }
    unsigned act_gamma(unsigned c, unsigned a) const { return gamma_act_[c][a]; }

    std::vector<Int> coords(unsigned a) const;            // representative in A-generators
    unsigned from_coords(const std::vector<Int>& x) const;
    FiniteGroup as_group() const;                          // the additive group
    const EquivariantModule& module() const { return mod_; }

private:
    EquivariantModule mod_;
    IntMat u_, u_inv_;
    std::vector<Int> diag_;                      // all invariant factors (size = rank)
    std::vector<std::vector<Int>> elements_;     // canonical reduced tuples
    std::map<std::vector<Int>, unsigned> index_;
    unsigned zero_;
    std::vector<std::vector<unsigned>> add_, g_act_, gamma_act_;
    std::vector<unsigned> neg_;
};

// 1 -> A -> B -> G -> 1 with compatible Gamma actions everywhere.
struct GammaExtension {
    GammaGroup total;           // B with the Gamma action on it
    FiniteGroup kernel;         // A
    GroupHom inclusion;         // A -> B
    GroupHom projection;        // B -> G
    GroupAction base_action;    // Gamma on G
    GroupAction kernel_action;  // Gamma on A
    std::optional<std::vector<unsigned>> section;  // lift per element of G

    void validate() const;  // exactness, equivariance, section property
};

struct GammaPropertyReport {
    bool via_injectivity = false;    // tau injective on {gamma(b) b^{-1}}
    bool has_gamma_section = false;
    bool gamma_trivial_on_kernel = false;
    bool criteria_agree = false;
    std::string witness;
};
GammaPropertyReport gamma_property_check(const GammaExtension& ext);

std::optional<std::vector<unsigned>> find_gamma_section(const GammaExtension& ext,
                                                        bool normalized = false);

// Normalized gamma-equivariant factor set.
struct FactorSet {
    GammaGroup gg;
    FiniteModuleView coeff;
    std::vector<std::vector<unsigned>> f;  // element index of f(x, y)

    void validate() const;
};

GammaExtension extension_from_factor_set(const FactorSet& fs);

// Requires an abelian kernel and a gamma-section with alpha(1) = 1; the view's
// additive group must be the extension kernel with matching actions.
FactorSet factor_set_from_extension(const GammaExtension& ext, const FiniteModuleView& view);

// The conjugation module structure on the abelian kernel of an extension.
EquivariantModule module_from_extension(const GammaExtension& ext);

bool are_equivalent(const GammaExtension& e1, const GammaExtension& e2);

struct E1Enumeration {
    std::vector<FactorSet> class_representatives;
    std::size_t class_count = 0;       // brute-force path
    Int h2_order = 0;                  // cochain pipeline path
    AbelianInvariants h2;
    bool match = false;
};
E1Enumeration enumerate_e1_gamma(const GammaGroup& gg, const FiniteModuleView& coeff,
                                 std::size_t budget = 2000000);

// All automorphisms of j, as permutation vectors.
std::vector<std::vector<unsigned>> automorphism_group(const FiniteGroup& j);
std::vector<std::vector<unsigned>> inner_automorphisms(const FiniteGroup& j);

// (G, J, psi): psi picks one automorphism representative per element of G;
// only its class modulo inner automorphisms matters. Gamma acts trivially
// on J, so psi must be constant modulo Inn on gamma-orbits of G.
struct AbstractKernel {
    GammaGroup gg;
    FiniteGroup j;
    std::vector<std::vector<unsigned>> psi;  // per G element, an automorphism of J

    void validate() const;
    Subgroup center_of_j() const { return center(j); }
};

struct ObstructionResult {
    std::vector<std::vector<std::vector<unsigned>>> k;  // k[x][y][z] in J (central)
    bool lands_in_center = false;
    bool gamma_map = false;
    bool cocycle = false;       // elementwise identity
    bool cocycle_via_complex = false;
    bool class_is_zero = false;
    AbelianInvariants h3;
};
ObstructionResult obstruction(const AbstractKernel& ak, std::mt19937* rechoice_rng = nullptr);

// Re-derives the obstruction with fresh random lift choices and checks the
// two cocycles are cohomologous.
bool obstruction_choice_independent(const AbstractKernel& ak, unsigned rechoices,
                                    std::uint32_t seed);

struct ObstructionExistenceReport {
    bool obstruction_vanishes = false;
    bool extension_found = false;
    bool agree = false;
};
ObstructionExistenceReport obstruction_vanishes_iff_extension_exists(
    const AbstractKernel& ak, std::size_t budget = 2000000);

}  // namespace gammahom
