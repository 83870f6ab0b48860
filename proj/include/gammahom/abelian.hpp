#pragma once

#include <string>

#include "gammahom/smith.hpp"

namespace gammahom {

// Canonical form of a finitely generated abelian group:
// Z^free_rank + Z/t1 + ... + Z/tk with t1 | t2 | ... | tk, ti >= 2.
struct AbelianInvariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const AbelianInvariants&) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    // Order of the group; 0 stands for infinite.
    Int order() const;
    std::string str() const;  // e.g. "Z^2 + Z/2 + Z/6", "0"
};

// Z^n_generators / (column lattice of relations).
struct FPAbelianGroup {
    std::size_t n_generators = 0;
    IntMat relations;  // n_generators rows; columns are relators

    FPAbelianGroup() : relations(0, 0) {}
    FPAbelianGroup(std::size_t n, IntMat rel);

    static FPAbelianGroup free_group(std::size_t n) { return {n, IntMat(n, 0)}; }
    static FPAbelianGroup cyclic(const Int& m);  // Z/m, or Z when m = 0

    AbelianInvariants invariants() const;
};

// Z-linear map between presented groups, given on generators.
struct AbelianMap {
    FPAbelianGroup source, target;
    IntMat matrix;  // target.n_generators x source.n_generators

    AbelianMap() = default;
    AbelianMap(FPAbelianGroup src, FPAbelianGroup tgt, IntMat m);

    static AbelianMap identity(const FPAbelianGroup& g);
    static AbelianMap zero(const FPAbelianGroup& src, const FPAbelianGroup& tgt);

    bool well_defined() const;  // matrix maps source relations into target's relation lattice
    bool is_zero_map() const;   // every generator image is a relation of the target
};

AbelianMap compose(const AbelianMap& f, const AbelianMap& g);  // f after g

// A subgroup of an ambient presented group, with the inclusion map.
struct SubgroupPresentation {
    FPAbelianGroup group;
    AbelianMap inclusion;  // group -> ambient
};

struct QuotientPresentation {
    FPAbelianGroup group;
    AbelianMap projection;  // ambient -> group
};

// span_Z(columns of w) / span_Z(columns of m), inside Z^a with both matrices
// having a rows; requires span(m) inside span(w).
FPAbelianGroup subquotient(const IntMat& w, const IntMat& m);

SubgroupPresentation kernel(const AbelianMap& f);
SubgroupPresentation image(const AbelianMap& f);
QuotientPresentation cokernel(const AbelianMap& f);

// Tensor product over Z of presented groups (Kronecker presentation).
FPAbelianGroup tensor_z(const FPAbelianGroup& a, const FPAbelianGroup& b);

}  // namespace gammahom
