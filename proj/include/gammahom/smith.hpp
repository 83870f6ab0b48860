#pragma once

#include <optional>

#include "gammahom/matrix.hpp"

namespace gammahom {

// u * a * v = d with u, v unimodular and d diagonal, d1 | d2 | ... | dr >= 0.
struct SmithDecomposition {
    IntMat u, d, v;
    std::size_t rank = 0;  // number of nonzero diagonal entries

    std::vector<Int> invariant_factors() const;  // the nonzero d_i
    void check(const IntMat& a) const;           // throws invariant_error on violation
};

SmithDecomposition smith_normal_form(const IntMat& a);

Int determinant(const IntMat& a);  // via fraction-free elimination

// Columns form a basis of the integer kernel {x : a x = 0}; the basis is
// saturated (spans the kernel as a sublattice of Z^cols, not a finite-index one).
IntMat kernel_basis(const IntMat& a);

// Repeated exact solves against a fixed matrix.
class SmithSolver {
public:
    explicit SmithSolver(IntMat a);

    // One integer solution of a x = b, if any.
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;
    // Columnwise solve of a X = B; nullopt if any column is unsolvable.
    std::optional<IntMat> solve(const IntMat& b) const;
    bool contains(const std::vector<Int>& b) const { return solve(b).has_value(); }
    // Every column of b lies in the column lattice of a.
    bool contains_all(const IntMat& b) const;

    const IntMat& matrix() const { return a_; }

private:
    IntMat a_;
    SmithDecomposition snf_;
};

// Columns spanning the lattice {x : a x lies in the column lattice of r}.
// r may have zero columns (then this is the kernel of a).
IntMat preimage_lattice(const IntMat& a, const IntMat& r);

}  // namespace gammahom
