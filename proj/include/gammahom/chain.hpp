#pragma once

#include "gammahom/abelian.hpp"
#include "gammahom/qlinalg.hpp"

namespace gammahom {

// Bounded complex of finitely presented abelian groups,
//   C_N -> ... -> C_1 -> C_0,
// boundary[n] is d_n : C_n -> C_{n-1} for 1 <= n <= N. Degrees outside the
// range are the zero group.
struct ChainComplexZ {
    std::vector<FPAbelianGroup> groups;
    std::vector<IntMat> boundary;  // boundary[0] unused

    std::size_t top_degree() const { return groups.empty() ? 0 : groups.size() - 1; }
    // Well-definedness of every boundary and d∘d = 0 as maps; throws invariant_error.
    void validate() const;
    AbelianInvariants homology(std::size_t n) const;
};

// ker(out) / im(in) where `out` leaves the group `at` (absent: zero map) and
// `in` arrives into it (absent: zero image). Shared by homology and cohomology.
AbelianInvariants subquotient_invariants(const FPAbelianGroup& at,
                                         const IntMat* out_matrix,
                                         const FPAbelianGroup* out_target,
                                         const IntMat* in_matrix);

// Bounded complex of rational vector spaces with explicit bases.
struct ChainComplexQ {
    std::vector<std::size_t> dims;
    std::vector<QMat> boundary;  // boundary[n] : C_n -> C_{n-1}; boundary[0] unused

    std::size_t top_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
    void validate() const;  // d∘d = 0
    std::size_t homology_dim(std::size_t n) const;
};

// A bounded free Z-complex carrying commuting-enough actions of a finite list
// of operators per degree (typically: generators of a group acting on each
// C_n). `action[n]` lists the operator matrices in degree n.
struct FreeComplexWithAction {
    std::vector<std::size_t> ranks;
    std::vector<IntMat> boundary;
    std::vector<std::vector<IntMat>> action;

    // d_n(g.x - x) lies in the subgroup generated by {g.y - y} in degree n-1,
    // for every action operator g. Strict equivariance implies this.
    bool boundaries_descend() const;
    bool strictly_equivariant() const;
};

// Degreewise coinvariants: C_n / <g.x - x>. Throws invariant_error when the
// boundaries do not descend.
ChainComplexZ coinvariant_complex(const FreeComplexWithAction& c);
ChainComplexQ coinvariant_complex_q(const FreeComplexWithAction& c);

struct CoinvariantComplexQ {
    ChainComplexQ complex;
    std::vector<QuotientSpace> spaces;  // per degree
};
CoinvariantComplexQ coinvariant_complex_q_with_spaces(const FreeComplexWithAction& c);

// Homology of a rational complex with explicit representing cycles, for
// computing maps induced on homology by chain maps.
struct HomologyBasisQ {
    std::size_t dim = 0;
    QMat reps;         // chain-degree representatives, one column per class
    QMat class_proj;   // chains -> coordinates modulo the incoming image
    QMat class_basis;  // class_proj * reps
};
HomologyBasisQ homology_basis_q(const ChainComplexQ& c, std::size_t n);

// Class coordinates of the given cycles in the basis of h.
QMat homology_class_coords(const HomologyBasisQ& h, const QMat& cycles);

}  // namespace gammahom
