#include "gammahom/module.hpp"

#include <sstream>

namespace gammahom {

std::string ModuleViolation::str() const {
    std::ostringstream os;
    os << kind << " (gamma=" << gamma << ", g=" << g << ", generator=" << generator << ")";
    return os.str();
}

namespace {

// f == h as maps out of the base group (columnwise difference in the relation lattice).
bool same_map(const FPAbelianGroup& base, const IntMat& f, const IntMat& h) {
    SmithSolver rel(base.relations);
    return rel.contains_all(f - h);
}

bool well_defined_endo(const FPAbelianGroup& base, const IntMat& m) {
    if (m.rows() != base.n_generators || m.cols() != base.n_generators) return false;
    if (base.relations.cols() == 0) return true;
    SmithSolver rel(base.relations);
    return rel.contains_all(m * base.relations);
}

}  // namespace

std::optional<ModuleViolation> validate(const EquivariantModule& m) {
    const auto& base = m.base;
    const std::size_t ng = m.gg.g.order(), nc = m.gg.gamma.order();
    if (m.g_action.size() != ng) return ModuleViolation{"g_action size mismatch"};
    if (m.gamma_action.size() != nc) return ModuleViolation{"gamma_action size mismatch"};

    for (unsigned g = 0; g < ng; ++g)
        if (!well_defined_endo(base, m.g_action[g]))
            return ModuleViolation{"g action not well defined", 0, g, 0};
    for (unsigned c = 0; c < nc; ++c)
        if (!well_defined_endo(base, m.gamma_action[c]))
            return ModuleViolation{"gamma action not well defined", c, 0, 0};

    IntMat id = IntMat::identity(base.n_generators);
    if (!same_map(base, m.g_action[m.gg.g.identity()], id))
        return ModuleViolation{"identity of G acts nontrivially"};
    if (!same_map(base, m.gamma_action[m.gg.gamma.identity()], id))
        return ModuleViolation{"identity of Gamma acts nontrivially"};

    // Automorphism: the inverse element's matrix inverts it.
    for (unsigned g = 0; g < ng; ++g)
        if (!same_map(base, m.g_action[g] * m.g_action[m.gg.g.inv(g)], id))
            return ModuleViolation{"g action not invertible", 0, g, 0};
    for (unsigned c = 0; c < nc; ++c)
        if (!same_map(base, m.gamma_action[c] * m.gamma_action[m.gg.gamma.inv(c)], id))
            return ModuleViolation{"gamma action not invertible", c, 0, 0};

    for (unsigned g = 0; g < ng; ++g)
        for (unsigned h = 0; h < ng; ++h)
            if (!same_map(base, m.g_action[g] * m.g_action[h], m.g_action[m.gg.g.mul(g, h)]))
                return ModuleViolation{"G representation law fails", 0, g, h};
    for (unsigned c = 0; c < nc; ++c)
        for (unsigned d = 0; d < nc; ++d)
            if (!same_map(base, m.gamma_action[c] * m.gamma_action[d],
                          m.gamma_action[m.gg.gamma.mul(c, d)]))
                return ModuleViolation{"Gamma representation law fails", c, d, 0};

    // Compatibility: gamma(g.a) = (gamma g).(gamma a), checked per generator.
    SmithSolver rel(base.relations);
    for (unsigned c = 0; c < nc; ++c)
        for (unsigned g = 0; g < ng; ++g) {
            IntMat lhs = m.gamma_action[c] * m.g_action[g];
            IntMat rhs = m.g_action[m.gg.act(c, g)] * m.gamma_action[c];
            IntMat diff = lhs - rhs;
            for (std::size_t j = 0; j < base.n_generators; ++j)
                if (!rel.contains(diff.col(j)))
                    return ModuleViolation{"compatibility fails", c, g, j};
        }
    return std::nullopt;
}

EquivariantModule make_trivial_module(const GammaGroup& gg, const FPAbelianGroup& base) {
    IntMat id = IntMat::identity(base.n_generators);
    return {gg, base, std::vector<IntMat>(gg.g.order(), id),
            std::vector<IntMat>(gg.gamma.order(), id)};
}

EquivariantModule make_trivial_z(const GammaGroup& gg) {
    return make_trivial_module(gg, FPAbelianGroup::free_group(1));
}

EquivariantModule make_trivial_cyclic(const GammaGroup& gg, const Int& m) {
    return make_trivial_module(gg, FPAbelianGroup::cyclic(m));
}

EquivariantModule group_ring_module(const GammaGroup& gg) {
    const std::size_t n = gg.g.order();
    std::vector<IntMat> ga, ca;
    for (unsigned g = 0; g < n; ++g) {
        IntMat m(n, n);
        for (unsigned x = 0; x < n; ++x) m(gg.g.mul(g, x), x) = 1;
        ga.push_back(std::move(m));
    }
    for (unsigned c = 0; c < gg.gamma.order(); ++c) {
        IntMat m(n, n);
        for (unsigned x = 0; x < n; ++x) m(gg.act(c, x), x) = 1;
        ca.push_back(std::move(m));
    }
    return {gg, FPAbelianGroup::free_group(n), std::move(ga), std::move(ca)};
}

EquivariantModule augmentation_ideal(const GammaGroup& gg) {
    const std::size_t n = gg.g.order();
    const unsigned e = gg.g.identity();
    // Basis b_x = x - e over x != e; index of x skips the identity.
    std::vector<unsigned> pos(n, ~0u);
    std::vector<unsigned> elems;
    for (unsigned x = 0; x < n; ++x)
        if (x != e) {
            pos[x] = static_cast<unsigned>(elems.size());
            elems.push_back(x);
        }
    auto basis_vec = [&](unsigned x, IntMat& col_target, std::size_t col) {
        // image of x - e in the b basis: b_x when x != e, zero otherwise
        if (x != e) col_target(pos[x], col) += 1;
    };
    std::vector<IntMat> ga, ca;
    for (unsigned g = 0; g < n; ++g) {
        IntMat m(n - 1, n - 1);
        for (unsigned x : elems) {
            // g.(x - e) = (gx - e) - (g - e)
            basis_vec(gg.g.mul(g, x), m, pos[x]);
            if (g != e) m(pos[g], pos[x]) -= 1;
        }
        ga.push_back(std::move(m));
    }
    for (unsigned c = 0; c < gg.gamma.order(); ++c) {
        IntMat m(n - 1, n - 1);
        for (unsigned x : elems) basis_vec(gg.act(c, x), m, pos[x]);
        ca.push_back(std::move(m));
    }
    return {gg, FPAbelianGroup::free_group(n == 0 ? 0 : n - 1), std::move(ga), std::move(ca)};
}

namespace {

IntMat action_differences(const FPAbelianGroup& base, const std::vector<IntMat>& action) {
    IntMat id = IntMat::identity(base.n_generators);
    IntMat out(base.n_generators, 0);
    for (const auto& m : action) out = out.hcat(m - id);
    return out;
}

}  // namespace

QuotientPresentation gamma_coinvariants(const EquivariantModule& m) {
    IntMat extra = action_differences(m.base, m.gamma_action);
    FPAbelianGroup q{m.base.n_generators, m.base.relations.hcat(extra)};
    return {q, AbelianMap(m.base, q, IntMat::identity(m.base.n_generators))};
}

SubgroupPresentation gamma_invariants(const EquivariantModule& m) {
    // Kernel of the stacked maps (gamma - id) : A -> A^{x |Gamma|}.
    const std::size_t n = m.base.n_generators;
    IntMat stacked(0, n);
    IntMat rel_stacked(0, 0);
    IntMat id = IntMat::identity(n);
    for (const auto& g : m.gamma_action) {
        stacked = stacked.vcat(g - id);
    }
    std::size_t copies = m.gamma_action.size();
    rel_stacked = IntMat(n * copies, m.base.relations.cols() * copies);
    for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m.base.relations.cols(); ++j)
                rel_stacked(c * n + i, c * m.base.relations.cols() + j) = m.base.relations(i, j);
    FPAbelianGroup big{n * copies, rel_stacked};
    AbelianMap f(m.base, big, stacked);
    return kernel(f);
}

FPAbelianGroup full_coinvariants(const EquivariantModule& m) {
    IntMat extra = action_differences(m.base, m.gamma_action).hcat(action_differences(m.base, m.g_action));
    return {m.base.n_generators, m.base.relations.hcat(extra)};
}

FPAbelianGroup tensor_over_semidirect(const EquivariantModule& m1, const EquivariantModule& m2) {
    if (!(m1.gg.g == m2.gg.g) || !(m1.gg.gamma == m2.gg.gamma) ||
        m1.gg.action.act != m2.gg.action.act)
        throw input_error("tensor over semidirect product requires the same gamma-group");
    FPAbelianGroup plain = tensor_z(m1.base, m2.base);
    const std::size_t n = plain.n_generators;
    IntMat id = IntMat::identity(n);
    IntMat extra(n, 0);
    for (unsigned g = 0; g < m1.gg.g.order(); ++g)
        extra = extra.hcat(kronecker(m1.act_g(g), m2.act_g(g)) - id);
    for (unsigned c = 0; c < m1.gg.gamma.order(); ++c)
        extra = extra.hcat(kronecker(m1.act_gamma(c), m2.act_gamma(c)) - id);
    return {n, plain.relations.hcat(extra)};
}

bool has_trivial_actions(const EquivariantModule& m) {
    IntMat id = IntMat::identity(m.base.n_generators);
    SmithSolver rel(m.base.relations);
    for (const auto& a : m.g_action)
        if (!rel.contains_all(a - id)) return false;
    for (const auto& a : m.gamma_action)
        if (!rel.contains_all(a - id)) return false;
    return true;
}

}  // namespace gammahom
