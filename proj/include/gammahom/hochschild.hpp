#pragma once

#include "gammahom/chain.hpp"
#include "gammahom/module.hpp"

namespace gammahom {

// Finite-dimensional unital algebra via structure constants,
// e_i e_j = sum_k sc[i][j][k] e_k, over Z or Q (constants are integral either way).
struct FinDimAlgebra {
    bool rational = true;
    std::size_t dim = 0;
    std::vector<Int> sc;  // flattened (i * dim + j) * dim + k
    std::vector<Int> unit;

    const Int& at(std::size_t i, std::size_t j, std::size_t k) const {
        return sc[(i * dim + j) * dim + k];
    }
    Int& at(std::size_t i, std::size_t j, std::size_t k) { return sc[(i * dim + j) * dim + k]; }
    void validate() const;  // associativity on basis triples, unit laws
    bool is_commutative() const;
    std::vector<Int> multiply(const std::vector<Int>& a, const std::vector<Int>& b) const;
    IntMat left_mult(std::size_t i) const;   // x -> e_i x
    IntMat right_mult(std::size_t i) const;  // x -> x e_i
};

FinDimAlgebra rational_field();
FinDimAlgebra truncated_polynomial_algebra(unsigned n);  // Q[x]/(x^n)
FinDimAlgebra matrix_algebra(const FinDimAlgebra& a, unsigned r);
FinDimAlgebra group_algebra(const FiniteGroup& g, bool rational);

struct AlgebraGammaAction {
    FiniteGroup gamma;
    std::vector<IntMat> mat;  // one per gamma element

    void validate(const FinDimAlgebra& a) const;  // unital algebra automorphisms, rep law
    static AlgebraGammaAction trivial(const FiniteGroup& gamma, const FinDimAlgebra& a);
};

AlgebraGammaAction matrix_algebra_action(const AlgebraGammaAction& act, unsigned r);  // entrywise
// Action on Z(G)/Q(G) induced by the gamma action on G.
AlgebraGammaAction group_algebra_action(const GammaGroup& gg);
// Sign action x -> -x on Q[x]/(x^n).
AlgebraGammaAction sign_action_on_truncated(unsigned n);

// The Hochschild complex C_n = A^{ox n+1} (coefficients in the regular
// bimodule), with the diagonal gamma action per degree:
//   b(a0 ox ... ox an) = sum_i (-1)^i (... a_i a_{i+1} ...) + (-1)^n (a_n a0 ox ...).
struct HochschildComplex {
    FinDimAlgebra algebra;
    std::size_t max_degree = 0;
    FreeComplexWithAction data;  // action[n] lists the non-identity gamma operators
};

HochschildComplex build_hochschild_complex(const FinDimAlgebra& a, const AlgebraGammaAction& act,
                                           std::size_t max_degree, std::size_t budget = 70000);

// Homology of the gamma-coinvariant complex.
std::size_t equivariant_hh_dim(const HochschildComplex& hc, std::size_t n);      // rational
AbelianInvariants equivariant_hh_invariants(const HochschildComplex& hc, std::size_t n);  // integral

// HH_0^Gamma(A) = A/[A,A]_Gamma with [A,A]_Gamma spanned by commutators and
// gamma-displacements.
FPAbelianGroup hh0_span_presentation(const FinDimAlgebra& a, const AlgebraGammaAction& act);
std::size_t hh0_span_dim(const FinDimAlgebra& a, const AlgebraGammaAction& act);

// Kaehler differentials of a commutative rational algebra: the A-module on
// symbols db_i modulo Leibniz relations, then gamma coinvariants.
std::size_t kahler_omega1_gamma_dim(const FinDimAlgebra& a, const AlgebraGammaAction& act);

// The signed cyclic operators t_n(a0,...,an) = (-1)^n (an, a0, ..., a_{n-1})
// per degree; satisfies the weak compatibility with b without strictness.
struct CyclicAction {
    std::vector<IntMat> t;  // per degree 0..N
    bool weak_condition_holds = false;
    bool strictly_equivariant = false;
};
CyclicAction cyclic_action(const HochschildComplex& hc);

// Connes homology: coinvariants under the cyclic action alone (rational base).
std::size_t connes_homology_dim(const HochschildComplex& hc, std::size_t n);
// Coinvariants under cyclic and gamma actions together.
std::size_t gamma_cyclic_homology_dim(const HochschildComplex& hc, std::size_t n);

// Chain-level trace and inclusion between C_*(M_r(A)) and C_*(A).
struct MoritaMaps {
    std::vector<QMat> trace;      // per degree: C_n(M_r(A)) -> C_n(A)
    std::vector<QMat> inclusion;  // per degree: C_n(A) -> C_n(M_r(A))
};
MoritaMaps morita_maps(const FinDimAlgebra& a, unsigned r, std::size_t max_degree);

struct MoritaReport {
    bool trace_chain_map = false, inclusion_chain_map = false;
    bool trace_equivariant = false, inclusion_equivariant = false;
    bool trace_inclusion_identity = false;  // tr ∘ inc = id on the nose
    std::vector<std::size_t> dims_small, dims_matrix;  // HH^Gamma dims per degree
    bool induced_isomorphism = false;  // induced maps mutually inverse
    std::string detail;
};
MoritaReport morita_check(const FinDimAlgebra& a, const AlgebraGammaAction& act, unsigned r,
                          std::size_t homology_max_degree, std::size_t budget = 70000);

// Bar-type contracting homotopy s(a0,...,an) = (1, a0, ..., an) against
// b'(a0,...,an) = sum_{i<n} (-1)^i (..., a_i a_{i+1}, ...): b's + sb' = id.
bool verify_bar_homotopy(const FinDimAlgebra& a, std::size_t max_degree);

// The complex with C_n = A^{ox n} and the augmentation-contracted boundary;
// for A = Z(G) its gamma-coinvariant homology is the equivariant group homology.
struct AugmentedBarComplex {
    std::size_t max_degree = 0;
    FreeComplexWithAction data;
};
AugmentedBarComplex augmented_group_bar_complex(const GammaGroup& gg, std::size_t max_degree,
                                                std::size_t budget = 70000);

struct Case2Report {
    bool match = true;
    std::vector<AbelianInvariants> hochschild_side, bar_side;  // degrees 0..N
    std::string detail;
};
Case2Report case2_crosscheck(const GammaGroup& gg, std::size_t max_degree,
                             std::size_t budget = 70000);

}  // namespace gammahom
