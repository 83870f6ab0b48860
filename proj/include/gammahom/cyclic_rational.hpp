#pragma once

#include "gammahom/bar.hpp"

namespace gammahom {

// The m x m matrices of multiplication by
//   D = t^{m-1} + t^{m-2} + ... + t - (m-1)   and
//   N = 1 + t + t^2 + ... + t^{m-1}
// on Q(Z_m) in the basis {1, t, ..., t^{m-1}}, with the augmentation row.
// The resolution ... -D-> Q(Z_m) -N-> Q(Z_m) -D-> Q(Z_m) -eps-> Q -> 0 is
// exact and commutes with every power action t -> t^k, gcd(k, m) = 1.
struct CyclicResolution {
    std::size_t m = 0;
    IntMat d_matrix, n_matrix;
    IntMat augmentation;  // 1 x m row of ones

    void check() const;  // DN = ND = 0, eps D = 0, rank conditions, D^2 = -mD
};

CyclicResolution build_resolution(std::size_t m);

// Exponents k(gamma) defining the action gamma . t = t^{k(gamma)}.
struct CyclicGammaAction {
    std::size_t m = 0;
    FiniteGroup gamma;
    std::vector<unsigned> k;  // one exponent per gamma element

    CyclicGammaAction(std::size_t m_, FiniteGroup gamma_, std::vector<unsigned> k_);
    bool nontrivial() const;
    IntMat permutation_matrix(unsigned c) const;  // t^i -> t^{i k(c)}
    GammaGroup gamma_group() const;
};

struct CompatibilityReport {
    bool compatible = true;
    std::string detail;
};
CompatibilityReport verify_gamma_compatibility(const CyclicResolution& res,
                                               const CyclicGammaAction& act);

// Homology of ... -N-> Q ox A_Gamma -D-> Q ox A_Gamma -> 0 with D, N induced by
// a -> sum_{i>=1} t^i.a - (m-1)a and a -> sum_{i>=0} t^i.a.
struct RationalHomologyResult {
    std::size_t dim = 0;
    QMat cycle_representatives;  // columns, in the coordinates of Q ox A_Gamma
};
RationalHomologyResult rational_homology(const CyclicGammaAction& act,
                                         const EquivariantModule& coeff, std::size_t n);

// Cohomology of 0 -> U -D-> U -N-> U -D-> ... on U = (Q ox A)^Gamma.
std::size_t rational_cohomology(const CyclicGammaAction& act, const EquivariantModule& coeff,
                                std::size_t n);

struct CrosscheckReport {
    bool match = true;
    std::vector<std::size_t> resolution_dims, bar_dims;  // degree 0..n
    std::string detail;
};
// Dimensions from the cyclic resolution against the rational bar coinvariant
// complex, degrees 0..max_degree.
CrosscheckReport crosscheck_vs_rational_bar(const CyclicGammaAction& act,
                                            const EquivariantModule& coeff,
                                            std::size_t max_degree, std::size_t budget = 50000);

}  // namespace gammahom
