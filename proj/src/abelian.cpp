#include "gammahom/abelian.hpp"

#include <sstream>

namespace gammahom {

Int AbelianInvariants::order() const {
    if (free_rank > 0) return 0;
    Int o = 1;
    for (const auto& t : torsion) o *= t;
    return o;
}

std::string AbelianInvariants::str() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        os << (first ? "" : " + ") << "Z/" << t;
        first = false;
    }
    return os.str();
}

FPAbelianGroup::FPAbelianGroup(std::size_t n, IntMat rel) : n_generators(n), relations(std::move(rel)) {
    if (relations.rows() != n_generators) {
        if (relations.rows() == 0 && relations.cols() == 0) {
            relations = IntMat(n_generators, 0);
        } else {
            throw input_error("relation matrix row count != generator count");
        }
    }
}

FPAbelianGroup FPAbelianGroup::cyclic(const Int& m) {
    if (m == 0) return free_group(1);
    IntMat rel(1, 1);
    rel(0, 0) = m;
    return {1, rel};
}

AbelianInvariants FPAbelianGroup::invariants() const {
    SmithDecomposition s = smith_normal_form(relations);
    AbelianInvariants inv;
    inv.free_rank = n_generators - s.rank;
    for (const auto& d : s.invariant_factors())
        if (d > 1) inv.torsion.push_back(d);
    return inv;
}

AbelianMap::AbelianMap(FPAbelianGroup src, FPAbelianGroup tgt, IntMat m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (matrix.rows() != target.n_generators || matrix.cols() != source.n_generators)
        throw input_error("map matrix shape does not match source/target generators");
}

AbelianMap AbelianMap::identity(const FPAbelianGroup& g) {
    return {g, g, IntMat::identity(g.n_generators)};
}

AbelianMap AbelianMap::zero(const FPAbelianGroup& src, const FPAbelianGroup& tgt) {
    return {src, tgt, IntMat(tgt.n_generators, src.n_generators)};
}

bool AbelianMap::well_defined() const {
    if (source.relations.cols() == 0) return true;
    SmithSolver tgt(target.relations);
    return tgt.contains_all(matrix * source.relations);
}

bool AbelianMap::is_zero_map() const {
    SmithSolver tgt(target.relations);
    return tgt.contains_all(matrix);
}

AbelianMap compose(const AbelianMap& f, const AbelianMap& g) {
    if (f.source.n_generators != g.target.n_generators)
        throw invariant_error("compose: middle groups disagree");
    return {g.source, f.target, f.matrix * g.matrix};
}

FPAbelianGroup subquotient(const IntMat& w, const IntMat& m) {
    if (w.rows() != m.rows() && m.cols() != 0)
        throw invariant_error("subquotient: ambient rank mismatch");
    SmithSolver ws(w);
    auto x = ws.solve(m);
    if (!x) throw invariant_error("subquotient: numerator does not contain denominator");
    // Generators = columns of w; relations = expressed denominators plus the
    // column dependencies of w itself.
    return {w.cols(), x->hcat(kernel_basis(w))};
}

SubgroupPresentation kernel(const AbelianMap& f) {
    // Classes [x] with f(x) in the target's relation lattice, modulo source relations.
    IntMat w = preimage_lattice(f.matrix, f.target.relations);
    FPAbelianGroup k = subquotient(w, f.source.relations);
    return {k, AbelianMap(k, f.source, w)};
}

SubgroupPresentation image(const AbelianMap& f) {
    // Generated by the generator images; z kills the class of f(z).
    IntMat rel = preimage_lattice(f.matrix, f.target.relations);
    FPAbelianGroup img{f.source.n_generators, rel};
    return {img, AbelianMap(img, f.target, f.matrix)};
}

QuotientPresentation cokernel(const AbelianMap& f) {
    FPAbelianGroup q{f.target.n_generators, f.matrix.hcat(f.target.relations)};
    return {q, AbelianMap(f.target, q, IntMat::identity(f.target.n_generators))};
}

FPAbelianGroup tensor_z(const FPAbelianGroup& a, const FPAbelianGroup& b) {
    const std::size_t n = a.n_generators * b.n_generators;
    // e_i ox f_j ordered with the second factor fastest.
    IntMat rel(n, a.relations.cols() * b.n_generators + a.n_generators * b.relations.cols());
    std::size_t col = 0;
    for (std::size_t c = 0; c < a.relations.cols(); ++c)
        for (std::size_t j = 0; j < b.n_generators; ++j, ++col)
            for (std::size_t i = 0; i < a.n_generators; ++i)
                rel(i * b.n_generators + j, col) = a.relations(i, c);
    for (std::size_t i = 0; i < a.n_generators; ++i)
        for (std::size_t c = 0; c < b.relations.cols(); ++c, ++col)
            for (std::size_t j = 0; j < b.n_generators; ++j)
                rel(i * b.n_generators + j, col) = b.relations(j, c);
    return {n, rel};
}

}  // namespace gammahom
