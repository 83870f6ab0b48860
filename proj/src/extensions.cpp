#include "gammahom/extensions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace gammahom {

// ---------------------------------------------------------------- module view

FiniteModuleView::FiniteModuleView(EquivariantModule mod, std::size_t max_size)
    : mod_(std::move(mod)) {
    if (auto v = gammahom::validate(mod_)) throw input_error("module invalid: " + v->str());
    const std::size_t ra = mod_.base.n_generators;
    SmithDecomposition s = smith_normal_form(mod_.base.relations);
    if (s.rank != ra) throw input_error("module has free part; element enumeration unavailable");
    u_ = s.u;
    diag_ = s.invariant_factors();
    SmithSolver us(u_);
    auto inv = us.solve(IntMat::identity(ra));
    if (!inv) throw invariant_error("failed to invert a unimodular matrix");
    u_inv_ = *inv;

    Int total = 1;
    for (const auto& d : diag_) total *= d;
    if (total > Int(max_size)) throw budget_error("module too large to enumerate elementwise");

    // Mixed-radix enumeration of canonical tuples.
    std::size_t n = static_cast<std::size_t>(total);
    std::vector<Int> cur(ra, 0);
    for (std::size_t i = 0; i < n; ++i) {
        elements_.push_back(cur);
        index_[cur] = static_cast<unsigned>(i);
        for (std::size_t p = ra; p-- > 0;) {
            cur[p] += 1;
            if (cur[p] < diag_[p]) break;
            cur[p] = 0;
        }
    }
    zero_ = index_[std::vector<Int>(ra, 0)];

    auto canon = [&](const std::vector<Int>& x) {
        std::vector<Int> y = u_.apply(x);
        for (std::size_t p = 0; p < ra; ++p) {
            y[p] %= diag_[p];
            if (y[p] < 0) y[p] += diag_[p];
        }
        return y;
    };

    add_.assign(n, std::vector<unsigned>(n));
    neg_.assign(n, 0);
    for (unsigned a = 0; a < n; ++a) {
        std::vector<Int> xa = u_inv_.apply(elements_[a]);
        std::vector<Int> neg_x(ra);
        for (std::size_t p = 0; p < ra; ++p) neg_x[p] = -xa[p];
        neg_[a] = index_.at(canon(neg_x));
        for (unsigned b = 0; b < n; ++b) {
            std::vector<Int> xb = u_inv_.apply(elements_[b]);
            for (std::size_t p = 0; p < ra; ++p) xb[p] += xa[p];
            add_[a][b] = index_.at(canon(xb));
        }
    }
    auto action_table = [&](const std::vector<IntMat>& mats) {
        std::vector<std::vector<unsigned>> t(mats.size(), std::vector<unsigned>(n));
        for (std::size_t g = 0; g < mats.size(); ++g)
            for (unsigned a = 0; a < n; ++a)
                t[g][a] = index_.at(canon(mats[g].apply(u_inv_.apply(elements_[a]))));
        return t;
    };
    g_act_ = action_table(mod_.g_action);
    gamma_act_ = action_table(mod_.gamma_action);
}

std::vector<Int> FiniteModuleView::coords(unsigned a) const { return u_inv_.apply(elements_[a]); }

unsigned FiniteModuleView::from_coords(const std::vector<Int>& x) const {
    std::vector<Int> y = u_.apply(x);
    for (std::size_t p = 0; p < y.size(); ++p) {
        y[p] %= diag_[p];
        if (y[p] < 0) y[p] += diag_[p];
    }
    return index_.at(y);
}

FiniteGroup FiniteModuleView::as_group() const {
    std::vector<std::vector<unsigned>> t(size(), std::vector<unsigned>(size()));
    for (unsigned a = 0; a < size(); ++a)
        for (unsigned b = 0; b < size(); ++b) t[a][b] = add_[a][b];
    return FiniteGroup(std::move(t));
}

// ---------------------------------------------------------------- extensions

void GammaExtension::validate() const {
    const FiniteGroup& b = total.g;
    if (!(inclusion.source == kernel) || !(inclusion.target == b))
        throw input_error("extension: inclusion endpoints wrong");
    if (!(projection.source == b) || !(projection.target == base_action.target))
        throw input_error("extension: projection endpoints wrong");
    if (!(total.gamma == base_action.gamma) || !(total.gamma == kernel_action.gamma))
        throw input_error("extension: gamma group mismatch");
    if (!inclusion.is_injective()) throw input_error("extension: inclusion not injective");
    if (!projection.is_surjective()) throw input_error("extension: projection not surjective");

    std::set<unsigned> img;
    for (unsigned a = 0; a < kernel.order(); ++a) img.insert(inclusion(a));
    for (unsigned x = 0; x < b.order(); ++x) {
        bool in_kernel = projection(x) == projection.target.identity();
        if (in_kernel != (img.count(x) > 0))
            throw input_error("extension: kernel of projection differs from image of inclusion");
    }
    if (!is_gamma_map(inclusion, kernel_action, total.action))
        throw input_error("extension: inclusion is not gamma-equivariant");
    if (!is_gamma_map(projection, total.action, base_action))
        throw input_error("extension: projection is not gamma-equivariant");
    if (section) {
        if (section->size() != projection.target.order())
            throw input_error("extension: section has wrong length");
        for (unsigned g = 0; g < projection.target.order(); ++g)
            if (projection((*section)[g]) != g) throw input_error("extension: section does not split tau");
    }
}

std::optional<std::vector<unsigned>> find_gamma_section(const GammaExtension& ext, bool normalized) {
    const FiniteGroup& g = ext.projection.target;
    const FiniteGroup& b = ext.total.g;
    GammaGroup base(g, ext.base_action.gamma, ext.base_action);
    TupleOrbits orb = tuple_orbits(base, 1);

    std::vector<unsigned> section(g.order(), 0);
    for (std::size_t o = 0; o < orb.orbit_count(); ++o) {
        unsigned rep = static_cast<unsigned>(orb.reps[o]);
        std::optional<unsigned> pick;
        for (unsigned x = 0; x < b.order(); ++x) {
            if (ext.projection(x) != rep) continue;
            if (normalized && rep == g.identity() && x != b.identity()) continue;
            bool fixed = true;
            for (unsigned s : orb.stabilizer[o])
                if (ext.total.action(s, x) != x) {
                    fixed = false;
                    break;
                }
            if (fixed) {
                pick = x;
                break;
            }
        }
        if (!pick) return std::nullopt;
        section[rep] = *pick;
    }
    // Propagate along orbits: s(gamma . rep) = gamma . s(rep).
    for (unsigned x = 0; x < g.order(); ++x) {
        unsigned rep = static_cast<unsigned>(orb.reps[orb.rep_of[x]]);
        section[x] = ext.total.action(orb.witness[x], section[rep]);
    }
    return section;
}

GammaPropertyReport gamma_property_check(const GammaExtension& ext) {
    GammaPropertyReport rep;
    const FiniteGroup& b = ext.total.g;
    std::ostringstream witness;

    // tau restricted to the set {gamma(x) x^{-1}}.
    std::set<unsigned> moved;
    for (unsigned c = 0; c < ext.total.gamma.order(); ++c)
        for (unsigned x = 0; x < b.order(); ++x)
            moved.insert(b.mul(ext.total.action(c, x), b.inv(x)));
    std::map<unsigned, unsigned> image_of;
    rep.via_injectivity = true;
    for (unsigned x : moved) {
        unsigned t = ext.projection(x);
        auto it = image_of.find(t);
        if (it != image_of.end()) {
            rep.via_injectivity = false;
            witness << "tau collision on the moved set at elements " << it->second << " and " << x << "; ";
            break;
        }
        image_of[t] = x;
    }

    rep.gamma_trivial_on_kernel = true;
    for (unsigned a = 0; a < ext.kernel.order() && rep.gamma_trivial_on_kernel; ++a) {
        unsigned x = ext.inclusion(a);
        for (unsigned c = 0; c < ext.total.gamma.order(); ++c)
            if (ext.total.action(c, x) != x) {
                rep.gamma_trivial_on_kernel = false;
                witness << "gamma moves kernel element " << a << "; ";
                break;
            }
    }
    rep.has_gamma_section = find_gamma_section(ext).has_value();
    rep.criteria_agree =
        rep.via_injectivity == (rep.has_gamma_section && rep.gamma_trivial_on_kernel);
    rep.witness = witness.str();
    return rep;
}

// ---------------------------------------------------------------- factor sets

void FactorSet::validate() const {
    const FiniteGroup& g = gg.g;
    const unsigned e = g.identity();
    if (f.size() != g.order()) throw input_error("factor set table has wrong size");
    for (const auto& row : f) {
        if (row.size() != g.order()) throw input_error("factor set table has wrong size");
        for (unsigned v : row)
            if (v >= coeff.size()) throw input_error("factor set value out of range");
    }
    for (unsigned x = 0; x < g.order(); ++x)
        if (f[e][x] != coeff.zero() || f[x][e] != coeff.zero())
            throw input_error("factor set not normalized");
    // Cocycle identity: x.f(y,z) - f(xy,z) + f(x,yz) - f(x,y) = 0.
    for (unsigned x = 0; x < g.order(); ++x)
        for (unsigned y = 0; y < g.order(); ++y)
            for (unsigned z = 0; z < g.order(); ++z) {
                unsigned lhs = coeff.add(coeff.act_g(x, f[y][z]), f[x][g.mul(y, z)]);
                unsigned rhs = coeff.add(f[g.mul(x, y)][z], f[x][y]);
                if (lhs != rhs) throw input_error("factor set violates the cocycle identity");
            }
    for (unsigned c = 0; c < gg.gamma.order(); ++c)
        for (unsigned x = 0; x < g.order(); ++x)
            for (unsigned y = 0; y < g.order(); ++y)
                if (f[gg.act(c, x)][gg.act(c, y)] != coeff.act_gamma(c, f[x][y]))
                    throw input_error("factor set is not gamma-equivariant");
}

GammaExtension extension_from_factor_set(const FactorSet& fs) {
    fs.validate();
    const FiniteGroup& g = fs.gg.g;
    const std::size_t na = fs.coeff.size(), ng = g.order();
    auto idx = [&](unsigned a, unsigned x) { return a * ng + x; };

    std::vector<std::vector<unsigned>> table(na * ng, std::vector<unsigned>(na * ng));
    for (unsigned a = 0; a < na; ++a)
        for (unsigned x = 0; x < ng; ++x)
            for (unsigned bb = 0; bb < na; ++bb)
                for (unsigned y = 0; y < ng; ++y) {
                    unsigned av = fs.coeff.add(fs.coeff.add(a, fs.coeff.act_g(x, bb)), fs.f[x][y]);
                    table[idx(a, x)][idx(bb, y)] = idx(av, g.mul(x, y));
                }
    FiniteGroup b(std::move(table));

    std::vector<std::vector<unsigned>> act(fs.gg.gamma.order(), std::vector<unsigned>(na * ng));
    for (unsigned c = 0; c < fs.gg.gamma.order(); ++c)
        for (unsigned a = 0; a < na; ++a)
            for (unsigned x = 0; x < ng; ++x)
                act[c][idx(a, x)] = idx(fs.coeff.act_gamma(c, a), fs.gg.act(c, x));
    GroupAction b_action(fs.gg.gamma, b, std::move(act));
    GammaGroup total(b, fs.gg.gamma, b_action);

    FiniteGroup kernel = fs.coeff.as_group();
    std::vector<unsigned> incl(na), proj(na * ng), sect(ng);
    for (unsigned a = 0; a < na; ++a) incl[a] = idx(a, g.identity());
    for (unsigned a = 0; a < na; ++a)
        for (unsigned x = 0; x < ng; ++x) proj[idx(a, x)] = x;
    for (unsigned x = 0; x < ng; ++x) sect[x] = idx(fs.coeff.zero(), x);

    std::vector<std::vector<unsigned>> ker_act(fs.gg.gamma.order(), std::vector<unsigned>(na));
    for (unsigned c = 0; c < fs.gg.gamma.order(); ++c)
        for (unsigned a = 0; a < na; ++a) ker_act[c][a] = fs.coeff.act_gamma(c, a);

    GammaExtension ext{std::move(total),
                       kernel,
                       GroupHom(kernel, b, incl),
                       GroupHom(b, g, proj),
                       fs.gg.action,
                       GroupAction(fs.gg.gamma, kernel, std::move(ker_act)),
                       sect};
    ext.validate();
    return ext;
}

EquivariantModule module_from_extension(const GammaExtension& ext) {
    if (!ext.kernel.is_abelian()) throw input_error("extension kernel is not abelian");
    const FiniteGroup& g = ext.projection.target;
    const FiniteGroup& b = ext.total.g;
    std::vector<unsigned> pre(b.order(), ~0u);
    for (unsigned a = 0; a < ext.kernel.order(); ++a) pre[ext.inclusion(a)] = a;

    // Any lift of g conjugates the kernel the same way (kernel abelian).
    std::vector<unsigned> lift(g.order(), 0);
    for (unsigned x = 0; x < b.order(); ++x) lift[ext.projection(x)] = x;

    const std::size_t n = ext.kernel.order();
    std::vector<IntMat> g_action, gamma_action;
    for (unsigned ge = 0; ge < g.order(); ++ge) {
        IntMat m(n, n);
        for (unsigned a = 0; a < n; ++a) {
            unsigned img = pre[b.conjugate(lift[ge], ext.inclusion(a))];
            m(img, a) = 1;
        }
        g_action.push_back(std::move(m));
    }
    for (unsigned c = 0; c < ext.total.gamma.order(); ++c) {
        IntMat m(n, n);
        for (unsigned a = 0; a < n; ++a) m(ext.kernel_action(c, a), a) = 1;
        gamma_action.push_back(std::move(m));
    }
    GammaGroup gg(g, ext.base_action.gamma, ext.base_action);
    EquivariantModule mod{gg, present_abelian_group(ext.kernel), std::move(g_action),
                          std::move(gamma_action)};
    if (auto v = gammahom::validate(mod))
        throw invariant_error("extension kernel module invalid: " + v->str());
    return mod;
}

FactorSet factor_set_from_extension(const GammaExtension& ext, const FiniteModuleView& view) {
    if (!ext.kernel.is_abelian()) throw input_error("factor sets need an abelian kernel");
    if (!(view.as_group() == ext.kernel))
        throw input_error("module view does not match the extension kernel");
    auto alpha = find_gamma_section(ext, /*normalized=*/true);
    if (!alpha) throw input_error("extension admits no gamma-section");

    const FiniteGroup& g = ext.projection.target;
    const FiniteGroup& b = ext.total.g;
    std::vector<unsigned> pre(b.order(), ~0u);
    for (unsigned a = 0; a < ext.kernel.order(); ++a) pre[ext.inclusion(a)] = a;

    std::vector<std::vector<unsigned>> f(g.order(), std::vector<unsigned>(g.order()));
    for (unsigned x = 0; x < g.order(); ++x)
        for (unsigned y = 0; y < g.order(); ++y) {
            unsigned val = b.mul(b.mul((*alpha)[x], (*alpha)[y]), b.inv((*alpha)[g.mul(x, y)]));
            if (pre[val] == ~0u) throw invariant_error("factor set value escaped the kernel");
            f[x][y] = pre[val];
        }
    GammaGroup gg(g, ext.base_action.gamma, ext.base_action);
    FactorSet fs{gg, view, std::move(f)};
    fs.validate();
    return fs;
}

bool are_equivalent(const GammaExtension& e1, const GammaExtension& e2) {
    if (!(e1.projection.target == e2.projection.target) || !(e1.kernel == e2.kernel) ||
        !(e1.total.gamma == e2.total.gamma) || e1.base_action.act != e2.base_action.act ||
        e1.kernel_action.act != e2.kernel_action.act)
        return false;
    const FiniteGroup& g = e1.projection.target;
    const FiniteGroup& b1 = e1.total.g;
    const FiniteGroup& b2 = e2.total.g;
    if (b1.order() != b2.order()) return false;
    const std::size_t na = e1.kernel.order(), ng = g.order();

    std::vector<unsigned> pre1(b1.order(), ~0u), pre2(b2.order(), ~0u);
    for (unsigned a = 0; a < na; ++a) {
        pre1[e1.inclusion(a)] = a;
        pre2[e2.inclusion(a)] = a;
    }
    // Canonical set sections with s(1) = 1.
    std::vector<unsigned> s1(ng), s2(ng);
    for (unsigned x = b1.order(); x-- > 0;) s1[e1.projection(x)] = x;
    for (unsigned x = b2.order(); x-- > 0;) s2[e2.projection(x)] = x;
    s1[g.identity()] = b1.identity();
    s2[g.identity()] = b2.identity();

    // theta(iota1(a) s1(x)) = iota2(a + c(x)) s2(x) over all c with c(1) = 0.
    std::vector<unsigned> free_xs;
    for (unsigned x = 0; x < ng; ++x)
        if (x != g.identity()) free_xs.push_back(x);
    std::vector<unsigned> c(ng, e1.kernel.identity());

    double combos = 1;
    for (std::size_t i = 0; i < free_xs.size(); ++i) combos *= static_cast<double>(na);
    if (combos > 2e6) throw budget_error("equivalence search too large");

    std::vector<unsigned> odo(free_xs.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < free_xs.size(); ++i) c[free_xs[i]] = odo[i];
        // Build theta.
        std::vector<unsigned> theta(b1.order());
        for (unsigned x = 0; x < b1.order(); ++x) {
            unsigned gx = e1.projection(x);
            unsigned a = pre1[b1.mul(x, b1.inv(s1[gx]))];
            theta[x] = b2.mul(e2.inclusion(e1.kernel.mul(a, c[gx])), s2[gx]);
        }
        bool ok = is_homomorphism(b1, b2, theta);
        for (unsigned cc = 0; cc < e1.total.gamma.order() && ok; ++cc)
            for (unsigned x = 0; x < b1.order() && ok; ++x)
                ok = theta[e1.total.action(cc, x)] == e2.total.action(cc, theta[x]);
        if (ok) return true;

        std::size_t p = 0;
        while (p < odo.size() && ++odo[p] == na) odo[p++] = 0;
        if (p == odo.size()) break;
    }
    return false;
}

// ---------------------------------------------------------------- enumeration

E1Enumeration enumerate_e1_gamma(const GammaGroup& gg, const FiniteModuleView& coeff,
                                 std::size_t budget) {
    const FiniteGroup& g = gg.g;
    const unsigned e = g.identity();
    TupleOrbits pairs = tuple_orbits(gg, 2);
    TupleOrbits singles = tuple_orbits(gg, 1);

    auto stab_fixed = [&](const std::vector<unsigned>& stab) {
        std::vector<unsigned> vals;
        for (unsigned a = 0; a < coeff.size(); ++a) {
            bool ok = true;
            for (unsigned s : stab)
                if (coeff.act_gamma(s, a) != a) {
                    ok = false;
                    break;
                }
            if (ok) vals.push_back(a);
        }
        return vals;
    };

    // Free cells: orbit reps with both entries != identity.
    std::vector<std::size_t> free_orbits;
    std::vector<std::vector<unsigned>> choices;
    double combos = 1;
    for (std::size_t o = 0; o < pairs.orbit_count(); ++o) {
        auto t = decode_tuple(pairs.reps[o], 2, g.order());
        if (t[0] == e || t[1] == e) continue;
        free_orbits.push_back(o);
        choices.push_back(stab_fixed(pairs.stabilizer[o]));
        combos *= static_cast<double>(choices.back().size());
    }
    if (combos > static_cast<double>(budget)) throw budget_error("factor set enumeration too large");

    auto build_table = [&](const std::vector<unsigned>& pick) {
        std::vector<std::vector<unsigned>> f(g.order(),
                                             std::vector<unsigned>(g.order(), coeff.zero()));
        std::vector<unsigned> value_of_orbit(pairs.orbit_count(), coeff.zero());
        for (std::size_t i = 0; i < free_orbits.size(); ++i) value_of_orbit[free_orbits[i]] = pick[i];
        for (std::size_t t = 0; t < pairs.rep_of.size(); ++t) {
            auto xy = decode_tuple(t, 2, g.order());
            if (xy[0] == e || xy[1] == e) continue;
            f[xy[0]][xy[1]] =
                coeff.act_gamma(pairs.witness[t], value_of_orbit[pairs.rep_of[t]]);
        }
        return f;
    };
    auto is_cocycle_table = [&](const std::vector<std::vector<unsigned>>& f) {
        for (unsigned x = 0; x < g.order(); ++x)
            for (unsigned y = 0; y < g.order(); ++y)
                for (unsigned z = 0; z < g.order(); ++z) {
                    unsigned lhs = coeff.add(coeff.act_g(x, f[y][z]), f[x][g.mul(y, z)]);
                    unsigned rhs = coeff.add(f[g.mul(x, y)][z], f[x][y]);
                    if (lhs != rhs) return false;
                }
        return true;
    };

    std::vector<std::vector<std::vector<unsigned>>> cocycles;
    std::vector<unsigned> odo(free_orbits.size(), 0);
    for (;;) {
        std::vector<unsigned> pick(free_orbits.size());
        for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = choices[i][odo[i]];
        auto f = build_table(pick);
        if (is_cocycle_table(f)) cocycles.push_back(std::move(f));
        std::size_t p = 0;
        while (p < odo.size() && ++odo[p] == choices[p].size()) odo[p++] = 0;
        if (p == odo.size() || odo.empty()) break;
    }

    // Coboundaries of normalized gamma-equivariant 1-cochains.
    std::set<std::vector<unsigned>> coboundaries;
    {
        std::vector<std::size_t> free1;
        std::vector<std::vector<unsigned>> choices1;
        double combos1 = 1;
        for (std::size_t o = 0; o < singles.orbit_count(); ++o) {
            if (singles.reps[o] == e) continue;
            free1.push_back(o);
            choices1.push_back(stab_fixed(singles.stabilizer[o]));
            combos1 *= static_cast<double>(choices1.back().size());
        }
        if (combos1 > static_cast<double>(budget)) throw budget_error("coboundary enumeration too large");
        std::vector<unsigned> odo1(free1.size(), 0);
        for (;;) {
            std::vector<unsigned> cch(g.order(), coeff.zero());
            for (unsigned x = 0; x < g.order(); ++x) {
                std::size_t o = singles.rep_of[x];
                auto it = std::find(free1.begin(), free1.end(), o);
                if (it == free1.end()) continue;
                std::size_t i = static_cast<std::size_t>(it - free1.begin());
                cch[x] = coeff.act_gamma(singles.witness[x], choices1[i][odo1[i]]);
            }
            std::vector<unsigned> table(g.order() * g.order(), coeff.zero());
            for (unsigned x = 0; x < g.order(); ++x)
                for (unsigned y = 0; y < g.order(); ++y)
                    table[x * g.order() + y] = coeff.add(
                        coeff.add(coeff.act_g(x, cch[y]), coeff.neg(cch[g.mul(x, y)])), cch[x]);
            coboundaries.insert(std::move(table));
            std::size_t p = 0;
            while (p < odo1.size() && ++odo1[p] == choices1[p].size()) odo1[p++] = 0;
            if (p == odo1.size() || odo1.empty()) break;
        }
    }

    // Group cocycles into classes: canonical key = min over coboundary shifts.
    E1Enumeration out;
    std::map<std::vector<unsigned>, std::size_t> class_of_key;
    for (const auto& f : cocycles) {
        std::vector<unsigned> flat(g.order() * g.order());
        for (unsigned x = 0; x < g.order(); ++x)
            for (unsigned y = 0; y < g.order(); ++y) flat[x * g.order() + y] = f[x][y];
        std::vector<unsigned> best = flat;
        for (const auto& cb : coboundaries) {
            std::vector<unsigned> shifted(flat.size());
            for (std::size_t i = 0; i < flat.size(); ++i)
                shifted[i] = coeff.add(flat[i], coeff.neg(cb[i]));
            best = std::min(best, shifted);
        }
        if (!class_of_key.count(best)) {
            class_of_key[best] = out.class_representatives.size();
            std::vector<std::vector<unsigned>> rep(g.order(), std::vector<unsigned>(g.order()));
            for (unsigned x = 0; x < g.order(); ++x)
                for (unsigned y = 0; y < g.order(); ++y) rep[x][y] = best[x * g.order() + y];
            FactorSet fs{gg, coeff, std::move(rep)};
            fs.validate();
            out.class_representatives.push_back(std::move(fs));
        }
    }
    out.class_count = class_of_key.size();
    out.h2 = cohomology_hn_gamma(gg, coeff.module(), 2);
    out.h2_order = out.h2.order();
    out.match = out.h2.free_rank == 0 && Int(out.class_count) == out.h2_order;
    return out;
}

// ----------------------------------------------------------- abstract kernels

std::vector<std::vector<unsigned>> automorphism_group(const FiniteGroup& j) {
    std::vector<unsigned> gens = generating_set(j);
    std::vector<std::vector<unsigned>> autos;
    std::vector<unsigned> imgs(gens.size());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == gens.size()) {
            auto full = extend_generator_images(j, j, gens, imgs);
            if (full) {
                std::set<unsigned> seen(full->begin(), full->end());
                if (seen.size() == j.order()) autos.push_back(*full);
            }
            return;
        }
        unsigned want = j.element_order(gens[k]);
        for (unsigned y = 0; y < j.order(); ++y) {
            if (j.element_order(y) != want) continue;
            imgs[k] = y;
            rec(k + 1);
        }
    };
    if (gens.empty()) {
        std::vector<unsigned> id(j.order());
        for (unsigned i = 0; i < j.order(); ++i) id[i] = i;
        return {id};
    }
    rec(0);
    std::sort(autos.begin(), autos.end());
    return autos;
}

std::vector<std::vector<unsigned>> inner_automorphisms(const FiniteGroup& j) {
    std::set<std::vector<unsigned>> inns;
    for (unsigned x = 0; x < j.order(); ++x) {
        std::vector<unsigned> p(j.order());
        for (unsigned a = 0; a < j.order(); ++a) p[a] = j.conjugate(x, a);
        inns.insert(std::move(p));
    }
    return {inns.begin(), inns.end()};
}

namespace {

std::vector<unsigned> compose_perm(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::vector<unsigned> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

std::vector<unsigned> invert_perm(const std::vector<unsigned>& a) {
    std::vector<unsigned> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<unsigned>(i);
    return r;
}

bool same_outer_class(const FiniteGroup& j, const std::vector<unsigned>& a,
                      const std::vector<unsigned>& b) {
    auto d = compose_perm(a, invert_perm(b));
    for (unsigned x = 0; x < j.order(); ++x) {
        bool match = true;
        for (unsigned l = 0; l < j.order() && match; ++l) match = d[l] == j.conjugate(x, l);
        if (match) return true;
    }
    return false;
}

}  // namespace

void AbstractKernel::validate() const {
    const FiniteGroup& g = gg.g;
    if (psi.size() != g.order()) throw input_error("abstract kernel: psi has wrong length");
    for (const auto& p : psi)
        if (!is_homomorphism(j, j, p) ||
            std::set<unsigned>(p.begin(), p.end()).size() != j.order())
            throw input_error("abstract kernel: psi value is not an automorphism");
    std::vector<unsigned> id(j.order());
    for (unsigned i = 0; i < j.order(); ++i) id[i] = i;
    if (!same_outer_class(j, psi[g.identity()], id))
        throw input_error("abstract kernel: psi(1) must be inner");
    for (unsigned x = 0; x < g.order(); ++x)
        for (unsigned y = 0; y < g.order(); ++y)
            if (!same_outer_class(j, compose_perm(psi[x], psi[y]), psi[g.mul(x, y)]))
                throw input_error("abstract kernel: psi is not a homomorphism into Out(J)");
    for (unsigned c = 0; c < gg.gamma.order(); ++c)
        for (unsigned x = 0; x < g.order(); ++x)
            if (!same_outer_class(j, psi[gg.act(c, x)], psi[x]))
                throw input_error("abstract kernel: psi is not constant on gamma-orbits mod Inn");
}

namespace {

struct LiftData {
    std::vector<std::vector<unsigned>> phi;            // per G element, automorphism of J
    std::vector<std::vector<unsigned>> f;              // f[x][y] in J
};

// Orbit-constant lifts with phi(1) = id and f normalized; optional random
// inner/central twists for the choice-independence test.
LiftData choose_lifts(const AbstractKernel& ak, std::mt19937* rng) {
    const FiniteGroup& g = ak.gg.g;
    const FiniteGroup& j = ak.j;
    TupleOrbits singles = tuple_orbits(ak.gg, 1);
    TupleOrbits pairs = tuple_orbits(ak.gg, 2);
    Subgroup c = center(j);

    LiftData d;
    d.phi.resize(g.order());
    std::vector<unsigned> id(j.order());
    for (unsigned i = 0; i < j.order(); ++i) id[i] = i;
    for (std::size_t o = 0; o < singles.orbit_count(); ++o) {
        unsigned rep = static_cast<unsigned>(singles.reps[o]);
        std::vector<unsigned> lift = (rep == g.identity()) ? id : ak.psi[rep];
        if (rng && rep != g.identity()) {
            std::uniform_int_distribution<unsigned> pick(0, static_cast<unsigned>(j.order() - 1));
            unsigned t = pick(*rng);
            std::vector<unsigned> inn(j.order());
            for (unsigned l = 0; l < j.order(); ++l) inn[l] = j.conjugate(t, l);
            lift = compose_perm(inn, lift);
        }
        d.phi[rep] = lift;
    }
    for (unsigned x = 0; x < g.order(); ++x)
        d.phi[x] = d.phi[singles.reps[singles.rep_of[x]]];

    d.f.assign(g.order(), std::vector<unsigned>(g.order(), j.identity()));
    for (std::size_t o = 0; o < pairs.orbit_count(); ++o) {
        auto xy = decode_tuple(pairs.reps[o], 2, g.order());
        if (xy[0] == g.identity() || xy[1] == g.identity()) continue;
        // phi(x) phi(y) = inn(f(x,y)) phi(xy)
        auto target = compose_perm(d.phi[xy[0]], d.phi[xy[1]]);
        auto base = d.phi[g.mul(xy[0], xy[1])];
        std::vector<unsigned> witnesses;
        for (unsigned w = 0; w < j.order(); ++w) {
            bool match = true;
            for (unsigned l = 0; l < j.order() && match; ++l)
                match = target[l] == j.conjugate(w, base[l]);
            if (match) witnesses.push_back(w);
        }
        if (witnesses.empty())
            throw invariant_error("no inner witness for a psi product; kernel data inconsistent");
        unsigned w = witnesses.front();
        if (rng) {
            std::uniform_int_distribution<std::size_t> pick(0, witnesses.size() - 1);
            w = witnesses[pick(*rng)];
        }
        d.f[xy[0]][xy[1]] = w;
    }
    // Propagate along gamma-orbits of pairs (gamma acts trivially on J).
    for (std::size_t t = 0; t < pairs.rep_of.size(); ++t) {
        auto xy = decode_tuple(t, 2, g.order());
        auto rep = decode_tuple(pairs.reps[pairs.rep_of[t]], 2, g.order());
        d.f[xy[0]][xy[1]] = d.f[rep[0]][rep[1]];
    }
    return d;
}

struct CenterContext {
    FiniteGroup c_group;
    std::vector<unsigned> c_index_of;  // J element -> index in center group (or ~0)
    std::vector<unsigned> j_of_c;      // center index -> J element
    EquivariantModule c_mod;
    CochainComplexGamma cc;  // to degree 4
};

CenterContext make_center_context(const AbstractKernel& ak) {
    const FiniteGroup& j = ak.j;
    Subgroup c = center(j);
    FiniteGroup c_group = subgroup_as_group(c);
    std::vector<unsigned> c_index_of(j.order(), ~0u);
    for (std::size_t i = 0; i < c.members.size(); ++i) c_index_of[c.members[i]] = static_cast<unsigned>(i);

    const std::size_t n = c_group.order();
    std::vector<IntMat> g_action, gamma_action;
    for (unsigned x = 0; x < ak.gg.g.order(); ++x) {
        IntMat m(n, n);
        // psi(x) restricted to the center; inner parts act trivially there,
        // so any representative gives the same permutation.
        for (unsigned a = 0; a < n; ++a) m(c_index_of[ak.psi[x][c.members[a]]], a) = 1;
        g_action.push_back(std::move(m));
    }
    IntMat id = IntMat::identity(n);
    for (unsigned cgen = 0; cgen < ak.gg.gamma.order(); ++cgen) gamma_action.push_back(id);
    EquivariantModule c_mod{ak.gg, present_abelian_group(c_group), std::move(g_action),
                            std::move(gamma_action)};
    if (auto v = gammahom::validate(c_mod))
        throw invariant_error("center module invalid: " + v->str());
    CochainComplexGamma cc = build_cochain_complex(ak.gg, c_mod, 4);
    return CenterContext{std::move(c_group), std::move(c_index_of), c.members, std::move(c_mod),
                         std::move(cc)};
}

std::vector<std::vector<std::vector<unsigned>>> obstruction_cocycle(const AbstractKernel& ak,
                                                                    const LiftData& lifts) {
    const FiniteGroup& g = ak.gg.g;
    const FiniteGroup& j = ak.j;
    std::vector<std::vector<std::vector<unsigned>>> k(
        g.order(), std::vector<std::vector<unsigned>>(g.order(), std::vector<unsigned>(g.order())));
    for (unsigned x = 0; x < g.order(); ++x)
        for (unsigned y = 0; y < g.order(); ++y)
            for (unsigned z = 0; z < g.order(); ++z) {
                // phi(x)(f(y,z)) f(x,yz) = k f(x,y) f(xy,z)
                unsigned lhs = j.mul(lifts.phi[x][lifts.f[y][z]], lifts.f[x][g.mul(y, z)]);
                unsigned rhs = j.mul(lifts.f[x][y], lifts.f[g.mul(x, y)][z]);
                k[x][y][z] = j.mul(lhs, j.inv(rhs));
            }
    return k;
}

std::vector<Int> obstruction_coords(const CenterContext& ctx, const AbstractKernel& ak,
                                    const std::vector<std::vector<std::vector<unsigned>>>& k_num,
                                    const std::vector<std::vector<std::vector<unsigned>>>& k_den) {
    const FiniteGroup& g = ak.gg.g;
    const std::size_t nc = ctx.c_group.order();
    std::size_t tuples = g.order() * g.order() * g.order();
    std::vector<std::vector<Int>> values(tuples, std::vector<Int>(nc, 0));
    for (unsigned x = 0; x < g.order(); ++x)
        for (unsigned y = 0; y < g.order(); ++y)
            for (unsigned z = 0; z < g.order(); ++z) {
                std::size_t t = encode_tuple({x, y, z}, g.order());
                values[t][ctx.c_index_of[k_num[x][y][z]]] += 1;
                if (!k_den.empty()) values[t][ctx.c_index_of[k_den[x][y][z]]] -= 1;
            }
    return cochain_coordinates(ctx.cc, 3, values);
}

}  // namespace

ObstructionResult obstruction(const AbstractKernel& ak, std::mt19937* rechoice_rng) {
    ak.validate();
    const FiniteGroup& g = ak.gg.g;
    const FiniteGroup& j = ak.j;
    Subgroup c = center(j);

    LiftData lifts = choose_lifts(ak, rechoice_rng);
    ObstructionResult res;
    res.k = obstruction_cocycle(ak, lifts);

    res.lands_in_center = true;
    for (unsigned x = 0; x < g.order() && res.lands_in_center; ++x)
        for (unsigned y = 0; y < g.order() && res.lands_in_center; ++y)
            for (unsigned z = 0; z < g.order() && res.lands_in_center; ++z)
                res.lands_in_center = c.contains(res.k[x][y][z]);
    if (!res.lands_in_center) throw invariant_error("obstruction does not land in the center");

    res.gamma_map = true;
    for (unsigned cg = 0; cg < ak.gg.gamma.order(); ++cg)
        for (unsigned x = 0; x < g.order(); ++x)
            for (unsigned y = 0; y < g.order(); ++y)
                for (unsigned z = 0; z < g.order(); ++z)
                    if (res.k[ak.gg.act(cg, x)][ak.gg.act(cg, y)][ak.gg.act(cg, z)] !=
                        res.k[x][y][z])
                        res.gamma_map = false;

    // Elementwise 3-cocycle identity with G acting through the lifts.
    res.cocycle = true;
    for (unsigned x1 = 0; x1 < g.order() && res.cocycle; ++x1)
        for (unsigned x2 = 0; x2 < g.order() && res.cocycle; ++x2)
            for (unsigned x3 = 0; x3 < g.order() && res.cocycle; ++x3)
                for (unsigned x4 = 0; x4 < g.order() && res.cocycle; ++x4) {
                    unsigned acc = lifts.phi[x1][res.k[x2][x3][x4]];
                    acc = j.mul(acc, j.inv(res.k[g.mul(x1, x2)][x3][x4]));
                    acc = j.mul(acc, res.k[x1][g.mul(x2, x3)][x4]);
                    acc = j.mul(acc, j.inv(res.k[x1][x2][g.mul(x3, x4)]));
                    acc = j.mul(acc, res.k[x1][x2][x3]);
                    res.cocycle = acc == j.identity();
                }

    CenterContext ctx = make_center_context(ak);
    std::vector<Int> coords = obstruction_coords(ctx, ak, res.k, {});
    res.cocycle_via_complex = is_cocycle(ctx.cc, 3, coords);
    res.class_is_zero = is_coboundary(ctx.cc, 3, coords);
    res.h3 = ctx.cc.cohomology(3);
    return res;
}

bool obstruction_choice_independent(const AbstractKernel& ak, unsigned rechoices,
                                    std::uint32_t seed) {
    ak.validate();
    CenterContext ctx = make_center_context(ak);
    LiftData base = choose_lifts(ak, nullptr);
    auto k_base = obstruction_cocycle(ak, base);
    std::mt19937 rng(seed);
    for (unsigned i = 0; i < rechoices; ++i) {
        LiftData alt = choose_lifts(ak, &rng);
        auto k_alt = obstruction_cocycle(ak, alt);
        std::vector<Int> diff = obstruction_coords(ctx, ak, k_base, k_alt);
        if (!is_coboundary(ctx.cc, 3, diff)) return false;
    }
    return true;
}

ObstructionExistenceReport obstruction_vanishes_iff_extension_exists(const AbstractKernel& ak,
                                                                     std::size_t budget) {
    ObstructionExistenceReport rep;
    rep.obstruction_vanishes = obstruction(ak).class_is_zero;

    const FiniteGroup& g = ak.gg.g;
    const FiniteGroup& j = ak.j;
    LiftData lifts = choose_lifts(ak, nullptr);
    TupleOrbits pairs = tuple_orbits(ak.gg, 2);

    std::vector<std::size_t> free_orbits;
    double combos = 1;
    for (std::size_t o = 0; o < pairs.orbit_count(); ++o) {
        auto xy = decode_tuple(pairs.reps[o], 2, g.order());
        if (xy[0] == g.identity() || xy[1] == g.identity()) continue;
        free_orbits.push_back(o);
        combos *= static_cast<double>(j.order());
    }
    if (combos > static_cast<double>(budget)) throw budget_error("extension search too large");

    const std::size_t nb = j.order() * g.order();
    auto idx = [&](unsigned a, unsigned x) { return a * g.order() + x; };
    std::vector<unsigned> odo(free_orbits.size(), 0);
    rep.extension_found = false;
    for (;;) {
        // f table for this assignment, orbit-constant and normalized.
        std::vector<std::vector<unsigned>> f(g.order(), std::vector<unsigned>(g.order(), j.identity()));
        std::vector<unsigned> value_of_orbit(pairs.orbit_count(), j.identity());
        for (std::size_t i = 0; i < free_orbits.size(); ++i) value_of_orbit[free_orbits[i]] = odo[i];
        for (std::size_t t = 0; t < pairs.rep_of.size(); ++t) {
            auto xy = decode_tuple(t, 2, g.order());
            if (xy[0] == g.identity() || xy[1] == g.identity()) continue;
            f[xy[0]][xy[1]] = value_of_orbit[pairs.rep_of[t]];
        }
        // Associativity of (a,x)(b,y) = (a phi(x)(b) f(x,y), xy).
        auto mul = [&](unsigned p, unsigned q) {
            unsigned a = p / g.order(), x = p % g.order();
            unsigned b = q / g.order(), y = q % g.order();
            return idx(j.mul(j.mul(a, lifts.phi[x][b]), f[x][y]), g.mul(x, y));
        };
        bool assoc = true;
        for (unsigned p = 0; p < nb && assoc; ++p)
            for (unsigned q = 0; q < nb && assoc; ++q)
                for (unsigned r = 0; r < nb && assoc; ++r)
                    assoc = mul(mul(p, q), r) == mul(p, mul(q, r));
        if (assoc) {
            rep.extension_found = true;
            break;
        }
        std::size_t p = 0;
        while (p < odo.size() && ++odo[p] == j.order()) odo[p++] = 0;
        if (p == odo.size() || odo.empty()) break;
    }
    rep.agree = rep.obstruction_vanishes == rep.extension_found;
    return rep;
}

}  // namespace gammahom
