#include "gammahom/bar.hpp"

#include <sstream>

namespace gammahom {

std::vector<unsigned> decode_tuple(std::size_t index, std::size_t degree, std::size_t base) {
    std::vector<unsigned> t(degree);
    for (std::size_t i = degree; i-- > 0;) {
        t[i] = static_cast<unsigned>(index % base);
        index /= base;
    }
    return t;
}

std::size_t encode_tuple(const std::vector<unsigned>& t, std::size_t base) {
    std::size_t index = 0;
    for (unsigned x : t) index = index * base + x;
    return index;
}

TupleOrbits tuple_orbits(const GammaGroup& gg, std::size_t degree) {
    const std::size_t base = gg.g.order();
    std::size_t count = 1;
    for (std::size_t i = 0; i < degree; ++i) count *= base;

    TupleOrbits o;
    o.group_order = base;
    o.degree = degree;
    o.rep_of.assign(count, ~std::size_t(0));
    o.witness.assign(count, 0);

    std::vector<unsigned> mapped(degree);
    for (std::size_t t = 0; t < count; ++t) {
        if (o.rep_of[t] != ~std::size_t(0)) continue;
        // t is lex-minimal in its orbit because smaller indices were claimed first.
        std::size_t orbit = o.reps.size();
        o.reps.push_back(t);
        o.stabilizer.emplace_back();
        std::vector<unsigned> rep = decode_tuple(t, degree, base);
        for (unsigned c = 0; c < gg.gamma.order(); ++c) {
            for (std::size_t i = 0; i < degree; ++i) mapped[i] = gg.act(c, rep[i]);
            std::size_t u = encode_tuple(mapped, base);
            if (u == t) o.stabilizer[orbit].push_back(c);
            if (o.rep_of[u] == ~std::size_t(0)) {
                o.rep_of[u] = orbit;
                o.witness[u] = c;
            }
        }
    }
    return o;
}

namespace {

void add_block(IntMat& m, std::size_t row0, std::size_t col0, const IntMat& b, int sign) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b(i, j) != 0) m(row0 + i, col0 + j) += sign * b(i, j);
}

struct BarTerm {
    std::size_t tuple;  // target tuple index (one degree down)
    int sign;
    bool first;     // the (g1^{-1} a) term, needing the coefficient twist
    unsigned g1 = 0;
};

// The n+1 terms of the bar boundary of the tuple (g_1 .. g_n).
std::vector<BarTerm> bar_terms(const FiniteGroup& g, const std::vector<unsigned>& t) {
    const std::size_t n = t.size();
    std::vector<BarTerm> out;
    std::vector<unsigned> u(t.begin() + 1, t.end());
    out.push_back({encode_tuple(u, g.order()), +1, true, t[0]});
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<unsigned> v = t;
        v[i] = g.mul(t[i], t[i + 1]);
        v.erase(v.begin() + i + 1);
        out.push_back({encode_tuple(v, g.order()), (i % 2 == 0) ? -1 : +1, false, 0});
    }
    std::vector<unsigned> w(t.begin(), t.end() - 1);
    out.push_back({encode_tuple(w, g.order()), (n % 2 == 0) ? +1 : -1, false, 0});
    return out;
}

void check_budget(std::size_t generators, std::size_t budget, std::size_t degree) {
    if (generators > budget) {
        std::ostringstream os;
        os << "bar complex degree " << degree << " needs " << generators
           << " generators, over the budget of " << budget;
        throw budget_error(os.str());
    }
}

}  // namespace

BarComplexGamma build_bar_complex(const GammaGroup& gg, const EquivariantModule& coeff,
                                  std::size_t max_degree, std::size_t budget) {
    if (auto v = validate(coeff)) throw input_error("coefficient module invalid: " + v->str());
    const std::size_t ra = coeff.base.n_generators;

    BarComplexGamma bar{gg, coeff, max_degree, {}, {}};
    for (std::size_t n = 0; n <= max_degree; ++n) {
        bar.orbits.push_back(tuple_orbits(gg, n));
        check_budget(bar.orbits[n].orbit_count() * ra, budget, n);
    }

    // Groups: per orbit, a copy of A modulo the stabilizer coinvariant relations.
    for (std::size_t n = 0; n <= max_degree; ++n) {
        const TupleOrbits& orb = bar.orbits[n];
        std::size_t gens = orb.orbit_count() * ra;
        std::size_t rel_cols = 0;
        std::vector<IntMat> block_rel(orb.orbit_count());
        for (std::size_t o = 0; o < orb.orbit_count(); ++o) {
            IntMat rel = coeff.base.relations;
            for (unsigned s : orb.stabilizer[o])
                if (s != gg.gamma.identity())
                    rel = rel.hcat(coeff.act_gamma(s) - IntMat::identity(ra));
            rel_cols += rel.cols();
            block_rel[o] = std::move(rel);
        }
        IntMat rel(gens, rel_cols);
        std::size_t col = 0;
        for (std::size_t o = 0; o < orb.orbit_count(); ++o) {
            add_block(rel, o * ra, col, block_rel[o], +1);
            col += block_rel[o].cols();
        }
        bar.complex.groups.emplace_back(gens, std::move(rel));
    }

    // Boundaries.
    bar.complex.boundary.resize(max_degree + 1);
    for (std::size_t n = 1; n <= max_degree; ++n) {
        const TupleOrbits& src = bar.orbits[n];
        const TupleOrbits& tgt = bar.orbits[n - 1];
        IntMat d(tgt.orbit_count() * ra, src.orbit_count() * ra);
        for (std::size_t o = 0; o < src.orbit_count(); ++o) {
            std::vector<unsigned> rep = decode_tuple(src.reps[o], n, gg.g.order());
            for (const BarTerm& term : bar_terms(gg.g, rep)) {
                std::size_t p = tgt.rep_of[term.tuple];
                unsigned wit = tgt.witness[term.tuple];
                // iota_u(v) = iota_rep(gamma^{-1} v) for u = gamma.rep.
                IntMat twist = coeff.act_gamma(gg.gamma.inv(wit));
                if (term.first) twist = twist * coeff.act_g(gg.g.inv(term.g1));
                add_block(d, p * ra, o * ra, twist, term.sign);
            }
        }
        bar.complex.boundary[n] = std::move(d);
    }
    bar.complex.validate();
    return bar;
}

ChainComplexQ build_bar_complex_q(const GammaGroup& gg, const EquivariantModule& coeff,
                                  std::size_t max_degree, std::size_t budget) {
    if (auto v = validate(coeff)) throw input_error("coefficient module invalid: " + v->str());
    const std::size_t ra = coeff.base.n_generators;

    std::vector<TupleOrbits> orbits;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        orbits.push_back(tuple_orbits(gg, n));
        check_budget(orbits[n].orbit_count() * ra, budget, n);
    }

    // Per-orbit rational coefficient blocks: Q ox A modulo stabilizer coinvariants.
    std::vector<std::vector<QuotientSpace>> block(max_degree + 1);
    std::vector<std::vector<std::size_t>> offset(max_degree + 1);
    ChainComplexQ out;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        std::size_t dim = 0;
        for (std::size_t o = 0; o < orbits[n].orbit_count(); ++o) {
            IntMat span = coeff.base.relations;
            for (unsigned s : orbits[n].stabilizer[o])
                if (s != gg.gamma.identity())
                    span = span.hcat(coeff.act_gamma(s) - IntMat::identity(ra));
            block[n].push_back(quotient_space(ra, to_rational(span)));
            offset[n].push_back(dim);
            dim += block[n].back().dim;
        }
        out.dims.push_back(dim);
    }

    out.boundary.resize(max_degree + 1);
    for (std::size_t n = 1; n <= max_degree; ++n) {
        const TupleOrbits& src = orbits[n];
        const TupleOrbits& tgt = orbits[n - 1];
        QMat d(out.dims[n - 1], out.dims[n]);
        for (std::size_t o = 0; o < src.orbit_count(); ++o) {
            std::vector<unsigned> rep = decode_tuple(src.reps[o], n, gg.g.order());
            for (const BarTerm& term : bar_terms(gg.g, rep)) {
                std::size_t p = tgt.rep_of[term.tuple];
                unsigned wit = tgt.witness[term.tuple];
                IntMat twist = coeff.act_gamma(gg.gamma.inv(wit));
                if (term.first) twist = twist * coeff.act_g(gg.g.inv(term.g1));
                QMat piece = block[n - 1][p].proj * to_rational(twist) * block[n][o].section;
                for (std::size_t i = 0; i < piece.rows(); ++i)
                    for (std::size_t j = 0; j < piece.cols(); ++j)
                        if (piece(i, j) != 0)
                            d(offset[n - 1][p] + i, offset[n][o] + j) +=
                                Rat(term.sign) * piece(i, j);
            }
        }
        out.boundary[n] = std::move(d);
    }
    out.validate();
    return out;
}

AbelianInvariants homology_hn_gamma(const GammaGroup& gg, const EquivariantModule& coeff,
                                    std::size_t n, std::size_t budget) {
    return build_bar_complex(gg, coeff, n + 1, budget).homology(n);
}

AbelianInvariants CochainComplexGamma::cohomology(std::size_t n) const {
    if (n >= groups.size()) return {};
    const IntMat* out = (n < delta.size()) ? &delta[n] : nullptr;
    const FPAbelianGroup* out_tgt = (n + 1 < groups.size()) ? &groups[n + 1] : nullptr;
    const IntMat* in = (n >= 1) ? &delta[n - 1] : nullptr;
    if (out && !out_tgt) out = nullptr;
    return subquotient_invariants(groups[n], out, out_tgt, in);
}

CochainComplexGamma build_cochain_complex(const GammaGroup& gg, const EquivariantModule& coeff,
                                          std::size_t max_degree, std::size_t budget) {
    if (auto v = validate(coeff)) throw input_error("coefficient module invalid: " + v->str());
    const std::size_t ra = coeff.base.n_generators;
    CochainComplexGamma cc{gg, coeff, max_degree, {}, {}, {}, {}, {}};

    for (std::size_t n = 0; n <= max_degree; ++n) {
        cc.orbits.push_back(tuple_orbits(gg, n));
        check_budget(cc.orbits[n].orbit_count() * ra, budget, n);
    }

    // Components: at each orbit the fixed subgroup A^{Stab(rep)}.
    for (std::size_t n = 0; n <= max_degree; ++n) {
        const TupleOrbits& orb = cc.orbits[n];
        std::vector<IntMat> incl(orb.orbit_count());
        std::vector<IntMat> rel(orb.orbit_count());
        std::vector<std::size_t> off(orb.orbit_count());
        std::size_t gens = 0, rel_cols = 0;
        for (std::size_t o = 0; o < orb.orbit_count(); ++o) {
            IntMat stacked(0, ra);
            IntMat rel_stacked(0, 0);
            for (unsigned s : orb.stabilizer[o]) {
                if (s == gg.gamma.identity()) continue;
                stacked = stacked.vcat(coeff.act_gamma(s) - IntMat::identity(ra));
            }
            if (stacked.rows() == 0) {
                incl[o] = IntMat::identity(ra);
            } else {
                std::size_t copies = stacked.rows() / ra;
                rel_stacked = IntMat(ra * copies, coeff.base.relations.cols() * copies);
                for (std::size_t c = 0; c < copies; ++c)
                    add_block(rel_stacked, c * ra, c * coeff.base.relations.cols(),
                              coeff.base.relations, +1);
                incl[o] = preimage_lattice(stacked, rel_stacked);
            }
            rel[o] = preimage_lattice(incl[o], coeff.base.relations);
            off[o] = gens;
            gens += incl[o].cols();
            rel_cols += rel[o].cols();
        }
        IntMat relations(gens, rel_cols);
        std::size_t col = 0;
        for (std::size_t o = 0; o < orb.orbit_count(); ++o) {
            add_block(relations, off[o], col, rel[o], +1);
            col += rel[o].cols();
        }
        cc.groups.emplace_back(gens, std::move(relations));
        cc.component_inclusion.push_back(std::move(incl));
        cc.component_offset.push_back(std::move(off));
    }

    // Coboundaries. delta f (g1..g_{n+1}) = g1 . f(g2..g_{n+1})
    //   + sum (-1)^i f(.. g_i g_{i+1} ..) + (-1)^{n+1} f(g1..gn).
    SmithSolver coeff_rel(coeff.base.relations);
    for (std::size_t n = 0; n < max_degree; ++n) {
        const TupleOrbits& src = cc.orbits[n];
        const TupleOrbits& tgt = cc.orbits[n + 1];
        const std::size_t src_gens = cc.groups[n].n_generators;
        IntMat dm(cc.groups[n + 1].n_generators, src_gens);
        for (std::size_t p = 0; p < tgt.orbit_count(); ++p) {
            std::vector<unsigned> s = decode_tuple(tgt.reps[p], n + 1, gg.g.order());
            // Value of delta f at the rep, as a map from all source coordinates to A.
            IntMat value(ra, src_gens);
            auto add_term = [&](std::size_t u_tuple, int sign, const IntMat* pre) {
                std::size_t o = src.rep_of[u_tuple];
                unsigned wit = src.witness[u_tuple];
                // f(u) = gamma . f(rep) for u = gamma.rep.
                IntMat piece = coeff.act_gamma(wit) * cc.component_inclusion[n][o];
                if (pre) piece = *pre * piece;
                add_block(value, 0, cc.component_offset[n][o], piece, sign);
            };
            {
                std::vector<unsigned> u(s.begin() + 1, s.end());
                add_term(encode_tuple(u, gg.g.order()), +1, &coeff.act_g(s[0]));
            }
            for (std::size_t i = 0; i + 1 < s.size(); ++i) {
                std::vector<unsigned> v = s;
                v[i] = gg.g.mul(s[i], s[i + 1]);
                v.erase(v.begin() + i + 1);
                add_term(encode_tuple(v, gg.g.order()), (i % 2 == 0) ? -1 : +1, nullptr);
            }
            {
                // sign (-1)^{n+1} with s.size() = n + 1
                std::vector<unsigned> w(s.begin(), s.end() - 1);
                add_term(encode_tuple(w, gg.g.order()), (s.size() % 2 == 0) ? +1 : -1, nullptr);
            }
            // Express the value in the target component's coordinates:
            // solve [W_p | R_A] (y; z) = value.
            const IntMat& w_p = cc.component_inclusion[n + 1][p];
            SmithSolver solver(w_p.hcat(coeff.base.relations));
            auto sol = solver.solve(value);
            if (!sol)
                throw invariant_error("coboundary value not stabilizer-invariant at degree " +
                                      std::to_string(n + 1));
            add_block(dm, cc.component_offset[n + 1][p], 0, sol->top_rows(w_p.cols()), +1);
        }
        cc.delta.push_back(std::move(dm));
    }

    // delta(delta) = 0 as maps.
    for (std::size_t n = 0; n + 1 < cc.delta.size(); ++n) {
        AbelianMap dd(cc.groups[n], cc.groups[n + 2], cc.delta[n + 1] * cc.delta[n]);
        if (!dd.is_zero_map())
            throw invariant_error("cochain complex: delta∘delta != 0 at degree " + std::to_string(n));
    }
    return cc;
}

AbelianInvariants cohomology_hn_gamma(const GammaGroup& gg, const EquivariantModule& coeff,
                                      std::size_t n, std::size_t budget) {
    return build_cochain_complex(gg, coeff, n + 1, budget).cohomology(n);
}

FPAbelianGroup gamma_derivations(const GammaGroup& gg, const EquivariantModule& coeff) {
    CochainComplexGamma cc = build_cochain_complex(gg, coeff, 2);
    AbelianMap d1(cc.groups[1], cc.groups[2], cc.delta[1]);
    return kernel(d1).group;
}

AbelianInvariants h1_via_formula(const GammaGroup& gg, const EquivariantModule& coeff) {
    if (!has_trivial_actions(coeff))
        throw input_error("the degree-1 formula needs trivial actions on the coefficients");
    auto q = quotient(gg.g, gamma_commutant(gg));
    return tensor_z(present_abelian_group(q.group), coeff.base).invariants();
}

std::vector<Int> cochain_coordinates(const CochainComplexGamma& cc, std::size_t degree,
                                     const std::vector<std::vector<Int>>& values) {
    const TupleOrbits& orb = cc.orbits[degree];
    const auto& coeff = cc.coeff;
    std::vector<Int> coords(cc.groups[degree].n_generators, 0);
    for (std::size_t o = 0; o < orb.orbit_count(); ++o) {
        const IntMat& w = cc.component_inclusion[degree][o];
        SmithSolver solver(w.hcat(coeff.base.relations));
        const std::vector<Int>& v = values[orb.reps[o]];
        auto sol = solver.solve(v);
        if (!sol) throw invariant_error("cochain value is not stabilizer-invariant");
        for (std::size_t j = 0; j < w.cols(); ++j)
            coords[cc.component_offset[degree][o] + j] = (*sol)[j];
    }
    return coords;
}

bool is_cocycle(const CochainComplexGamma& cc, std::size_t degree, const std::vector<Int>& coords) {
    if (degree >= cc.delta.size()) throw input_error("cocycle test needs degree+1 built");
    IntMat v(coords.size(), 1);
    for (std::size_t i = 0; i < coords.size(); ++i) v(i, 0) = coords[i];
    SmithSolver rel(cc.groups[degree + 1].relations);
    return rel.contains_all(cc.delta[degree] * v);
}

bool is_coboundary(const CochainComplexGamma& cc, std::size_t degree, const std::vector<Int>& coords) {
    if (degree == 0 || degree > cc.delta.size()) throw input_error("coboundary test out of range");
    SmithSolver solver(cc.delta[degree - 1].hcat(cc.groups[degree].relations));
    return solver.contains(coords);
}

FPAbelianGroup present_abelian_group(const FiniteGroup& g) {
    if (!g.is_abelian()) throw input_error("presentation helper expects an abelian group");
    const std::size_t n = g.order();
    IntMat rel(n, 1 + n * n);
    rel(g.identity(), 0) = 1;
    std::size_t col = 1;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b, ++col) {
            rel(a, col) += 1;
            rel(b, col) += 1;
            rel(g.mul(a, b), col) -= 1;
        }
    return {n, rel};
}

AbelianInvariants abelian_invariants(const FiniteGroup& g) {
    return present_abelian_group(g).invariants();
}

H1SequenceReport check_h1_exact_sequence(const GammaGroup& gg) {
    H1SequenceReport r;
    const FiniteGroup& g = gg.g;
    Subgroup gamma_g = gamma_subgroup(gg);
    Subgroup comm = commutator_subgroup(g);
    Subgroup cap = intersect(gamma_g, comm);

    // Left term as a quotient of the subgroup GammaG.
    {
        FiniteGroup sub = subgroup_as_group(gamma_g);
        std::vector<unsigned> idx_of(g.order(), ~0u);
        for (std::size_t i = 0; i < gamma_g.members.size(); ++i)
            idx_of[gamma_g.members[i]] = static_cast<unsigned>(i);
        std::vector<unsigned> cap_in_sub;
        for (unsigned x : cap.members) cap_in_sub.push_back(idx_of[x]);
        auto q = quotient(sub, Subgroup(sub, cap_in_sub));
        r.left = abelian_invariants(q.group);
    }

    auto triv = GammaGroup::with_trivial_action(g, make_cyclic(1));
    r.middle = homology_hn_gamma(triv, make_trivial_z(triv), 1);
    r.middle_group_side = abelian_invariants(quotient(g, comm).group);
    r.right = homology_hn_gamma(gg, make_trivial_z(gg), 1);
    r.right_group_side = abelian_invariants(quotient(g, gamma_commutant(gg)).group);

    std::ostringstream detail;
    bool ok = true;

    // The injection GammaG/cap -> G/[G,G]: x, y in GammaG land in the same
    // coset of [G,G] only when they share a coset of cap.
    {
        bool inj = true;
        for (unsigned x : gamma_g.members)
            for (unsigned y : gamma_g.members) {
                unsigned d = g.mul(g.inv(y), x);
                if (comm.contains(d) && !cap.contains(d)) inj = false;
            }
        if (!inj) {
            ok = false;
            detail << "left map not injective; ";
        }
    }
    // Image of the left map equals the kernel of H_1(G) -> H_1^Gamma(G):
    // [G,G]_Gamma must equal the subgroup generated by [G,G] and GammaG.
    {
        std::vector<unsigned> gens = comm.members;
        gens.insert(gens.end(), gamma_g.members.begin(), gamma_g.members.end());
        if (!(closure(g, gens).members == gamma_commutant(gg).members)) {
            ok = false;
            detail << "image != kernel in the middle; ";
        }
    }
    if (r.middle != r.middle_group_side) {
        ok = false;
        detail << "classical H1 disagrees with G^ab; ";
    }
    if (r.right != r.right_group_side) {
        ok = false;
        detail << "equivariant H1 disagrees with G/[G,G]_Gamma; ";
    }
    // Orders multiply.
    if (r.left.order() * r.right.order() != r.middle.order() || r.middle.free_rank != 0) {
        ok = false;
        detail << "orders do not multiply; ";
    }
    r.exact = ok;
    r.detail = detail.str();
    return r;
}

}  // namespace gammahom
