#include "gammahom/chain.hpp"

namespace gammahom {

void ChainComplexZ::validate() const {
    for (std::size_t n = 1; n < groups.size(); ++n) {
        AbelianMap d(groups[n], groups[n - 1], boundary[n]);
        if (!d.well_defined())
            throw invariant_error("chain complex: boundary " + std::to_string(n) + " not well defined");
        if (n + 1 < groups.size()) {
            AbelianMap dd(groups[n + 1], groups[n - 1], boundary[n] * boundary[n + 1]);
            if (!dd.is_zero_map())
                throw invariant_error("chain complex: d∘d != 0 at degree " + std::to_string(n + 1));
        }
    }
}

AbelianInvariants subquotient_invariants(const FPAbelianGroup& at,
                                         const IntMat* out_matrix,
                                         const FPAbelianGroup* out_target,
                                         const IntMat* in_matrix) {
    if (at.n_generators == 0) return {};
    IntMat cycles = out_matrix ? preimage_lattice(*out_matrix, out_target->relations)
                               : IntMat::identity(at.n_generators);
    IntMat kill = in_matrix ? in_matrix->hcat(at.relations) : at.relations;
    return subquotient(cycles, kill).invariants();
}

AbelianInvariants ChainComplexZ::homology(std::size_t n) const {
    if (n >= groups.size()) return {};
    const IntMat* out = (n >= 1) ? &boundary[n] : nullptr;
    const FPAbelianGroup* out_tgt = (n >= 1) ? &groups[n - 1] : nullptr;
    const IntMat* in = (n + 1 < groups.size()) ? &boundary[n + 1] : nullptr;
    return subquotient_invariants(groups[n], out, out_tgt, in);
}

void ChainComplexQ::validate() const {
    for (std::size_t n = 1; n + 1 < dims.size(); ++n)
        if (!(boundary[n] * boundary[n + 1]).is_zero())
            throw invariant_error("rational complex: d∘d != 0 at degree " + std::to_string(n + 1));
}

std::size_t ChainComplexQ::homology_dim(std::size_t n) const {
    if (n >= dims.size()) return 0;
    std::size_t rank_out = (n >= 1) ? rank_q(boundary[n]) : 0;
    std::size_t rank_in = (n + 1 < dims.size()) ? rank_q(boundary[n + 1]) : 0;
    return dims[n] - rank_out - rank_in;
}

namespace {

// Columns {g.x - x} over all operators g and generators x of degree n.
IntMat action_span(const FreeComplexWithAction& c, std::size_t n) {
    IntMat span(c.ranks[n], 0);
    for (const auto& g : c.action[n]) span = span.hcat(g - IntMat::identity(c.ranks[n]));
    return span;
}

}  // namespace

bool FreeComplexWithAction::strictly_equivariant() const {
    for (std::size_t n = 1; n < ranks.size(); ++n)
        for (std::size_t j = 0; j < action[n].size(); ++j)
            if (boundary[n] * action[n][j] != action[n - 1][j] * boundary[n]) return false;
    return true;
}

bool FreeComplexWithAction::boundaries_descend() const {
    if (strictly_equivariant()) return true;
    for (std::size_t n = 1; n < ranks.size(); ++n) {
        SmithSolver below(action_span(*this, n - 1));
        for (const auto& g : action[n]) {
            IntMat moved = boundary[n] * (g - IntMat::identity(ranks[n]));
            if (!below.contains_all(moved)) return false;
        }
    }
    return true;
}

ChainComplexZ coinvariant_complex(const FreeComplexWithAction& c) {
    if (!c.boundaries_descend())
        throw invariant_error("group action on complex: boundary does not descend to coinvariants");
    ChainComplexZ out;
    for (std::size_t n = 0; n < c.ranks.size(); ++n)
        out.groups.emplace_back(c.ranks[n], action_span(c, n));
    out.boundary = c.boundary;
    return out;
}

HomologyBasisQ homology_basis_q(const ChainComplexQ& c, std::size_t n) {
    if (n >= c.dims.size()) return {};
    QMat cycles = (n >= 1) ? nullspace_q(c.boundary[n]) : QMat::identity(c.dims[n]);
    QMat incoming = (n + 1 < c.dims.size()) ? c.boundary[n + 1] : QMat(c.dims[n], 0);
    QuotientSpace q = quotient_space(c.dims[n], incoming);
    QMat reduced = q.proj * cycles;

    HomologyBasisQ h;
    h.class_proj = q.proj;
    h.reps = QMat(c.dims[n], 0);
    QMat have(q.dim, 0);
    for (std::size_t j = 0; j < cycles.cols(); ++j) {
        QMat cand(q.dim, 1);
        for (std::size_t i = 0; i < q.dim; ++i) cand(i, 0) = reduced(i, j);
        if (cand.is_zero()) continue;
        if (have.cols() > 0 && in_column_span(have, cand)) continue;
        have = have.hcat(cand);
        QMat col(c.dims[n], 1);
        for (std::size_t i = 0; i < c.dims[n]; ++i) col(i, 0) = cycles(i, j);
        h.reps = h.reps.hcat(col);
    }
    h.dim = h.reps.cols();
    h.class_basis = std::move(have);
    return h;
}

QMat homology_class_coords(const HomologyBasisQ& h, const QMat& cycles) {
    auto x = solve_q(h.class_basis, h.class_proj * cycles);
    if (!x) throw invariant_error("chain is not a cycle modulo the incoming image");
    return *x;
}

CoinvariantComplexQ coinvariant_complex_q_with_spaces(const FreeComplexWithAction& c) {
    if (!c.boundaries_descend())
        throw invariant_error("group action on complex: boundary does not descend to coinvariants");
    CoinvariantComplexQ out;
    for (std::size_t n = 0; n < c.ranks.size(); ++n) {
        out.spaces.push_back(quotient_space(c.ranks[n], to_rational(action_span(c, n))));
        out.complex.dims.push_back(out.spaces.back().dim);
    }
    out.complex.boundary.resize(c.ranks.size());
    for (std::size_t n = 1; n < c.ranks.size(); ++n)
        out.complex.boundary[n] =
            out.spaces[n - 1].proj * to_rational(c.boundary[n]) * out.spaces[n].section;
    return out;
}

ChainComplexQ coinvariant_complex_q(const FreeComplexWithAction& c) {
    return coinvariant_complex_q_with_spaces(c).complex;
}

}  // namespace gammahom
