#include "gammahom/hochschild.hpp"

#include <sstream>

#include "gammahom/bar.hpp"

namespace gammahom {

void FinDimAlgebra::validate() const {
    if (sc.size() != dim * dim * dim) throw input_error("structure constants have wrong size");
    if (unit.size() != dim) throw input_error("unit vector has wrong size");
    // Associativity on basis triples: (e_i e_j) e_k = e_i (e_j e_k).
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                for (std::size_t l = 0; l < dim; ++l) {
                    Int lhs = 0, rhs = 0;
                    for (std::size_t m = 0; m < dim; ++m) {
                        lhs += at(i, j, m) * at(m, k, l);
                        rhs += at(j, k, m) * at(i, m, l);
                    }
                    if (lhs != rhs) throw input_error("structure constants are not associative");
                }
    // Unit laws.
    std::vector<Int> e(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::fill(e.begin(), e.end(), Int(0));
        e[i] = 1;
        if (multiply(unit, e) != e || multiply(e, unit) != e)
            throw input_error("unit laws fail");
    }
}

bool FinDimAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (at(i, j, k) != at(j, i, k)) return false;
    return true;
}

std::vector<Int> FinDimAlgebra::multiply(const std::vector<Int>& a,
                                         const std::vector<Int>& b) const {
    std::vector<Int> r(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j] == 0) continue;
            for (std::size_t k = 0; k < dim; ++k)
                if (at(i, j, k) != 0) r[k] += a[i] * b[j] * at(i, j, k);
        }
    }
    return r;
}

IntMat FinDimAlgebra::left_mult(std::size_t i) const {
    IntMat m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) m(k, j) = at(i, j, k);
    return m;
}

IntMat FinDimAlgebra::right_mult(std::size_t i) const {
    IntMat m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) m(k, j) = at(j, i, k);
    return m;
}

FinDimAlgebra rational_field() {
    FinDimAlgebra a{true, 1, {Int(1)}, {Int(1)}};
    a.validate();
    return a;
}

FinDimAlgebra truncated_polynomial_algebra(unsigned n) {
    if (n == 0) throw input_error("truncated polynomial algebra needs n >= 1");
    FinDimAlgebra a;
    a.rational = true;
    a.dim = n;
    a.sc.assign(static_cast<std::size_t>(n) * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n) a.at(i, j, i + j) = 1;
    a.unit.assign(n, 0);
    a.unit[0] = 1;
    a.validate();
    return a;
}

FinDimAlgebra matrix_algebra(const FinDimAlgebra& a, unsigned r) {
    if (r == 0) throw input_error("matrix algebra needs r >= 1");
    FinDimAlgebra b;
    b.rational = a.rational;
    b.dim = static_cast<std::size_t>(r) * r * a.dim;
    b.sc.assign(b.dim * b.dim * b.dim, 0);
    auto idx = [&](unsigned p, unsigned q, std::size_t i) {
        return (static_cast<std::size_t>(p) * r + q) * a.dim + i;
    };
    for (unsigned p = 0; p < r; ++p)
        for (unsigned q = 0; q < r; ++q)
            for (unsigned s = 0; s < r; ++s)
                for (unsigned t = 0; t < r; ++t) {
                    if (q != s) continue;
                    for (std::size_t i = 0; i < a.dim; ++i)
                        for (std::size_t j = 0; j < a.dim; ++j)
                            for (std::size_t k = 0; k < a.dim; ++k)
                                if (a.at(i, j, k) != 0)
                                    b.at(idx(p, q, i), idx(s, t, j), idx(p, t, k)) = a.at(i, j, k);
                }
    b.unit.assign(b.dim, 0);
    for (unsigned p = 0; p < r; ++p)
        for (std::size_t i = 0; i < a.dim; ++i) b.unit[idx(p, p, i)] = a.unit[i];
    b.validate();
    return b;
}

FinDimAlgebra group_algebra(const FiniteGroup& g, bool rational) {
    FinDimAlgebra a;
    a.rational = rational;
    a.dim = g.order();
    a.sc.assign(a.dim * a.dim * a.dim, 0);
    for (unsigned i = 0; i < g.order(); ++i)
        for (unsigned j = 0; j < g.order(); ++j) a.at(i, j, g.mul(i, j)) = 1;
    a.unit.assign(a.dim, 0);
    a.unit[g.identity()] = 1;
    a.validate();
    return a;
}

void AlgebraGammaAction::validate(const FinDimAlgebra& a) const {
    if (mat.size() != gamma.order()) throw input_error("need one matrix per gamma element");
    for (const auto& m : mat) {
        if (m.rows() != a.dim || m.cols() != a.dim) throw input_error("action matrix shape mismatch");
        // Unital algebra endomorphism.
        if (m.apply(a.unit) != a.unit) throw input_error("action does not fix the unit");
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) {
                std::vector<Int> ei(a.dim, 0), ej(a.dim, 0);
                ei[i] = 1;
                ej[j] = 1;
                std::vector<Int> lhs = a.multiply(m.apply(ei), m.apply(ej));
                std::vector<Int> prod(a.dim);
                for (std::size_t k = 0; k < a.dim; ++k) prod[k] = a.at(i, j, k);
                if (lhs != m.apply(prod)) throw input_error("action is not multiplicative");
            }
    }
    if (!(mat[gamma.identity()] == IntMat::identity(a.dim)))
        throw input_error("identity must act as the identity matrix");
    for (unsigned c = 0; c < gamma.order(); ++c)
        for (unsigned d = 0; d < gamma.order(); ++d)
            if (!(mat[c] * mat[d] == mat[gamma.mul(c, d)]))
                throw input_error("action matrices violate the representation law");
}

AlgebraGammaAction AlgebraGammaAction::trivial(const FiniteGroup& gamma_, const FinDimAlgebra& a) {
    return {gamma_, std::vector<IntMat>(gamma_.order(), IntMat::identity(a.dim))};
}

AlgebraGammaAction matrix_algebra_action(const AlgebraGammaAction& act, unsigned r) {
    std::vector<IntMat> mats;
    for (const auto& m : act.mat) mats.push_back(kronecker(IntMat::identity(r * r), m));
    return {act.gamma, std::move(mats)};
}

AlgebraGammaAction group_algebra_action(const GammaGroup& gg) {
    std::vector<IntMat> mats;
    for (unsigned c = 0; c < gg.gamma.order(); ++c) {
        IntMat m(gg.g.order(), gg.g.order());
        for (unsigned x = 0; x < gg.g.order(); ++x) m(gg.act(c, x), x) = 1;
        mats.push_back(std::move(m));
    }
    return {gg.gamma, std::move(mats)};
}

AlgebraGammaAction sign_action_on_truncated(unsigned n) {
    IntMat m(n, n);
    for (unsigned i = 0; i < n; ++i) m(i, i) = (i % 2 == 0) ? 1 : -1;  // x^i -> (-x)^i
    return {make_cyclic(2), {IntMat::identity(n), std::move(m)}};
}

namespace {

std::size_t pow_size(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= base;
    return r;
}

// b_n : A^{ox n+1} -> A^{ox n}.
IntMat hochschild_boundary(const FinDimAlgebra& a, std::size_t n) {
    const std::size_t d = a.dim;
    IntMat b(pow_size(d, n), pow_size(d, n + 1));
    std::vector<unsigned> t(n + 1);
    for (std::size_t col = 0; col < b.cols(); ++col) {
        std::size_t rest = col;
        for (std::size_t p = n + 1; p-- > 0;) {
            t[p] = static_cast<unsigned>(rest % d);
            rest /= d;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            int sign = (i % 2 == 0) ? 1 : -1;
            // Merge positions i, i+1; the last face multiplies a_n * a_0.
            std::size_t x = t[i], y = t[(i + 1) % (n + 1)];
            for (std::size_t k = 0; k < d; ++k) {
                if (a.at(x, y, k) == 0) continue;
                std::size_t w = 0;
                if (i < n) {
                    for (std::size_t p = 0; p <= n; ++p) {
                        if (p == i + 1) continue;
                        w = w * d + (p == i ? k : t[p]);
                    }
                } else {
                    for (std::size_t p = 0; p < n; ++p) w = w * d + (p == 0 ? k : t[p]);
                }
                b(w, col) += sign * a.at(x, y, k);
            }
        }
    }
    return b;
}

IntMat kron_power(const IntMat& m, std::size_t e) {
    IntMat r = IntMat::identity(1);
    for (std::size_t i = 0; i < e; ++i) r = kronecker(r, m);
    return r;
}

}  // namespace

HochschildComplex build_hochschild_complex(const FinDimAlgebra& a, const AlgebraGammaAction& act,
                                           std::size_t max_degree, std::size_t budget) {
    a.validate();
    act.validate(a);
    bool nontrivial = false;
    for (const auto& m : act.mat)
        if (!(m == IntMat::identity(a.dim))) nontrivial = true;

    HochschildComplex hc{a, max_degree, {}};
    for (std::size_t n = 0; n <= max_degree; ++n) {
        std::size_t rank = pow_size(a.dim, n + 1);
        if (rank > budget)
            throw budget_error("hochschild complex degree " + std::to_string(n) + " needs " +
                               std::to_string(rank) + " generators, over budget");
        if (nontrivial && rank > 4096)
            throw budget_error("gamma action matrices too large at degree " + std::to_string(n));
        hc.data.ranks.push_back(rank);
        std::vector<IntMat> ops;
        if (nontrivial)
            for (unsigned c = 0; c < act.gamma.order(); ++c) {
                if (c == act.gamma.identity()) continue;
                ops.push_back(kron_power(act.mat[c], n + 1));
            }
        hc.data.action.push_back(std::move(ops));
    }
    hc.data.boundary.resize(max_degree + 1);
    for (std::size_t n = 1; n <= max_degree; ++n)
        hc.data.boundary[n] = hochschild_boundary(a, n);
    // b is strictly equivariant for the diagonal action.
    if (!hc.data.strictly_equivariant())
        throw invariant_error("hochschild boundary is not equivariant for the diagonal action");
    for (std::size_t n = 2; n <= max_degree; ++n)
        if (!(hc.data.boundary[n - 1] * hc.data.boundary[n]).is_zero())
            throw invariant_error("hochschild complex: b*b != 0");
    return hc;
}

std::size_t equivariant_hh_dim(const HochschildComplex& hc, std::size_t n) {
    return coinvariant_complex_q(hc.data).homology_dim(n);
}

AbelianInvariants equivariant_hh_invariants(const HochschildComplex& hc, std::size_t n) {
    return coinvariant_complex(hc.data).homology(n);
}

FPAbelianGroup hh0_span_presentation(const FinDimAlgebra& a, const AlgebraGammaAction& act) {
    IntMat span(a.dim, 0);
    IntMat id = IntMat::identity(a.dim);
    for (unsigned c = 0; c < act.gamma.order(); ++c)
        if (c != act.gamma.identity()) span = span.hcat(act.mat[c] - id);
    IntMat comm(a.dim, a.dim * a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                comm(k, i * a.dim + j) = a.at(i, j, k) - a.at(j, i, k);
    return {a.dim, span.hcat(comm)};
}

std::size_t hh0_span_dim(const FinDimAlgebra& a, const AlgebraGammaAction& act) {
    return hh0_span_presentation(a, act).invariants().free_rank;
}

std::size_t kahler_omega1_gamma_dim(const FinDimAlgebra& a, const AlgebraGammaAction& act) {
    if (!a.is_commutative()) throw input_error("Kaehler differentials need a commutative algebra");
    if (!a.rational) throw input_error("Kaehler differentials computed over Q only");
    const std::size_t d = a.dim;
    // Generators x_l ox db_i; Leibniz relations multiplied through by each b_l.
    IntMat rel(d * d, d * d * d);
    std::size_t col = 0;
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j, ++col) {
                // b_l ( d(b_i b_j) - b_i db_j - b_j db_i )
                for (std::size_t k = 0; k < d; ++k) {
                    if (a.at(i, j, k) != 0) rel(l * d + k, col) += a.at(i, j, k);
                    if (a.at(l, i, k) != 0) rel(k * d + j, col) -= a.at(l, i, k);
                    if (a.at(l, j, k) != 0) rel(k * d + i, col) -= a.at(l, j, k);
                }
            }
    // Gamma coinvariants: gamma(x ox db) = gamma(x) ox d(gamma b).
    IntMat span = rel;
    IntMat id = IntMat::identity(d * d);
    for (unsigned c = 0; c < act.gamma.order(); ++c) {
        if (c == act.gamma.identity()) continue;
        span = span.hcat(kronecker(act.mat[c], act.mat[c]) - id);
    }
    return d * d - rank_q(to_rational(span));
}

CyclicAction cyclic_action(const HochschildComplex& hc) {
    const std::size_t d = hc.algebra.dim;
    CyclicAction ca;
    for (std::size_t n = 0; n < hc.data.ranks.size(); ++n) {
        IntMat t(hc.data.ranks[n], hc.data.ranks[n]);
        int sign = (n % 2 == 0) ? 1 : -1;
        std::vector<unsigned> tup(n + 1);
        for (std::size_t col = 0; col < t.cols(); ++col) {
            std::size_t rest = col;
            for (std::size_t p = n + 1; p-- > 0;) {
                tup[p] = static_cast<unsigned>(rest % d);
                rest /= d;
            }
            // (a0,...,an) -> (an, a0, ..., a_{n-1})
            std::size_t w = tup[n];
            for (std::size_t p = 0; p < n; ++p) w = w * d + tup[p];
            t(w, col) += sign;
        }
        // t^{n+1} = id (the signs cancel: (-1)^{n(n+1)} = 1).
        IntMat power = IntMat::identity(hc.data.ranks[n]);
        for (std::size_t i = 0; i <= n; ++i) power = t * power;
        if (!(power == IntMat::identity(hc.data.ranks[n])))
            throw invariant_error("cyclic operator has wrong order");
        ca.t.push_back(std::move(t));
    }
    FreeComplexWithAction with_t{hc.data.ranks, hc.data.boundary, {}};
    for (std::size_t n = 0; n < ca.t.size(); ++n) with_t.action.push_back({ca.t[n]});
    ca.strictly_equivariant = with_t.strictly_equivariant();
    ca.weak_condition_holds = with_t.boundaries_descend();
    return ca;
}

namespace {

FreeComplexWithAction with_extra_action(const HochschildComplex& hc,
                                        const std::vector<IntMat>* cyclic) {
    FreeComplexWithAction c{hc.data.ranks, hc.data.boundary, hc.data.action};
    if (cyclic)
        for (std::size_t n = 0; n < c.action.size(); ++n) c.action[n].push_back((*cyclic)[n]);
    return c;
}

}  // namespace

std::size_t connes_homology_dim(const HochschildComplex& hc, std::size_t n) {
    CyclicAction ca = cyclic_action(hc);
    if (!ca.weak_condition_holds)
        throw invariant_error("cyclic action fails the weak compatibility condition");
    FreeComplexWithAction c{hc.data.ranks, hc.data.boundary, {}};
    for (std::size_t k = 0; k < ca.t.size(); ++k) c.action.push_back({ca.t[k]});
    return coinvariant_complex_q(c).homology_dim(n);
}

std::size_t gamma_cyclic_homology_dim(const HochschildComplex& hc, std::size_t n) {
    CyclicAction ca = cyclic_action(hc);
    if (!ca.weak_condition_holds)
        throw invariant_error("cyclic action fails the weak compatibility condition");
    FreeComplexWithAction c = with_extra_action(hc, &ca.t);
    return coinvariant_complex_q(c).homology_dim(n);
}

MoritaMaps morita_maps(const FinDimAlgebra& a, unsigned r, std::size_t max_degree) {
    const std::size_t d = a.dim;
    const std::size_t units = static_cast<std::size_t>(r) * r;
    const std::size_t bd = units * d;
    MoritaMaps mm;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        std::size_t small_rank = pow_size(d, n + 1), big_rank = pow_size(bd, n + 1);
        QMat tr(small_rank, big_rank), inc(big_rank, small_rank);
        std::vector<unsigned> p(n + 1), q(n + 1), i(n + 1);
        for (std::size_t col = 0; col < big_rank; ++col) {
            std::size_t rest = col;
            for (std::size_t t = n + 1; t-- > 0;) {
                std::size_t b = rest % bd;
                rest /= bd;
                i[t] = static_cast<unsigned>(b % d);
                std::size_t pq = b / d;
                p[t] = static_cast<unsigned>(pq / r);
                q[t] = static_cast<unsigned>(pq % r);
            }
            // trace of the matrix-unit product e_{p0 q0} ... e_{pn qn}
            bool nonzero = q[n] == p[0];
            for (std::size_t t = 0; t + 1 <= n && nonzero; ++t) nonzero = q[t] == p[t + 1];
            if (nonzero) {
                std::size_t w = 0;
                for (std::size_t t = 0; t <= n; ++t) w = w * d + i[t];
                tr(w, col) += 1;
            }
        }
        for (std::size_t col = 0; col < small_rank; ++col) {
            std::size_t rest = col, w = 0;
            std::vector<unsigned> tup(n + 1);
            for (std::size_t t = n + 1; t-- > 0;) {
                tup[t] = static_cast<unsigned>(rest % d);
                rest /= d;
            }
            for (std::size_t t = 0; t <= n; ++t) w = w * bd + tup[t];  // p = q = 0 block
            inc(w, col) = 1;
        }
        mm.trace.push_back(std::move(tr));
        mm.inclusion.push_back(std::move(inc));
    }
    return mm;
}

MoritaReport morita_check(const FinDimAlgebra& a, const AlgebraGammaAction& act, unsigned r,
                          std::size_t homology_max_degree, std::size_t budget) {
    MoritaReport rep;
    std::ostringstream detail;
    FinDimAlgebra big = matrix_algebra(a, r);
    AlgebraGammaAction big_act = matrix_algebra_action(act, r);
    big_act.validate(big);

    // Chain identities up to degree 3, skipping degrees whose dense big-side
    // boundary would not fit the working-set budget.
    const std::size_t chain_degree = 3;
    const std::size_t entry_budget = 4000000;
    auto big_rank = [&](std::size_t n) {
        std::size_t rk = 1;
        for (std::size_t i = 0; i <= n; ++i) rk *= big.dim;
        return rk;
    };
    MoritaMaps mm = morita_maps(a, r, chain_degree);
    rep.trace_inclusion_identity = true;
    for (std::size_t n = 0; n <= chain_degree; ++n)
        if (!(mm.trace[n] * mm.inclusion[n] == QMat::identity(mm.inclusion[n].cols())))
            rep.trace_inclusion_identity = false;

    rep.trace_chain_map = rep.inclusion_chain_map = true;
    for (std::size_t n = 1; n <= chain_degree; ++n) {
        if (big_rank(n) * big_rank(n - 1) > entry_budget) {
            detail << "chain identity skipped at degree " << n << " (size); ";
            continue;
        }
        QMat b_small = to_rational(hochschild_boundary(a, n));
        QMat b_big = to_rational(hochschild_boundary(big, n));
        if (!(mm.trace[n - 1] * b_big == b_small * mm.trace[n])) rep.trace_chain_map = false;
        if (!(mm.inclusion[n - 1] * b_small == b_big * mm.inclusion[n])) rep.inclusion_chain_map = false;
    }

    // Gamma equivariance of both maps, degree by degree.
    rep.trace_equivariant = rep.inclusion_equivariant = true;
    for (std::size_t n = 0; n <= chain_degree; ++n) {
        if (big_rank(n) * big_rank(n) > entry_budget) break;
        for (unsigned c = 0; c < act.gamma.order(); ++c) {
            QMat gs = to_rational(kron_power(act.mat[c], n + 1));
            QMat gb = to_rational(kron_power(big_act.mat[c], n + 1));
            if (!(mm.trace[n] * gb == gs * mm.trace[n])) rep.trace_equivariant = false;
            if (!(mm.inclusion[n] * gs == gb * mm.inclusion[n])) rep.inclusion_equivariant = false;
        }
    }

    // Induced maps on the equivariant homology.
    HochschildComplex hc_small = build_hochschild_complex(a, act, homology_max_degree + 1, budget);
    HochschildComplex hc_big = build_hochschild_complex(big, big_act, homology_max_degree + 1, budget);
    CoinvariantComplexQ qs = coinvariant_complex_q_with_spaces(hc_small.data);
    CoinvariantComplexQ qb = coinvariant_complex_q_with_spaces(hc_big.data);

    rep.induced_isomorphism = true;
    for (std::size_t n = 0; n <= homology_max_degree; ++n) {
        rep.dims_small.push_back(qs.complex.homology_dim(n));
        rep.dims_matrix.push_back(qb.complex.homology_dim(n));
        HomologyBasisQ hs = homology_basis_q(qs.complex, n);
        HomologyBasisQ hb = homology_basis_q(qb.complex, n);
        if (hs.dim != hb.dim) {
            rep.induced_isomorphism = false;
            detail << "degree " << n << ": dims differ; ";
            continue;
        }
        QMat tr_q = qs.spaces[n].proj * mm.trace[n] * qb.spaces[n].section;
        QMat inc_q = qb.spaces[n].proj * mm.inclusion[n] * qs.spaces[n].section;
        QMat tr_h = homology_class_coords(hs, tr_q * hb.reps);
        QMat inc_h = homology_class_coords(hb, inc_q * hs.reps);
        if (!(tr_h * inc_h == QMat::identity(hs.dim)) || !(inc_h * tr_h == QMat::identity(hb.dim))) {
            rep.induced_isomorphism = false;
            detail << "degree " << n << ": induced maps not mutually inverse; ";
        }
    }
    rep.detail = detail.str();
    return rep;
}

bool verify_bar_homotopy(const FinDimAlgebra& a, std::size_t max_degree) {
    const std::size_t d = a.dim;
    // b'_n: A^{ox n+1} -> A^{ox n} without the wrap-around term;
    // s_n: A^{ox n+1} -> A^{ox n+2}, prepending the unit.
    auto bprime = [&](std::size_t n) {
        IntMat b(pow_size(d, n), pow_size(d, n + 1));
        std::vector<unsigned> t(n + 1);
        for (std::size_t col = 0; col < b.cols(); ++col) {
            std::size_t rest = col;
            for (std::size_t p = n + 1; p-- > 0;) {
                t[p] = static_cast<unsigned>(rest % d);
                rest /= d;
            }
            for (std::size_t i = 0; i < n; ++i) {
                int sign = (i % 2 == 0) ? 1 : -1;
                for (std::size_t k = 0; k < d; ++k) {
                    if (a.at(t[i], t[i + 1], k) == 0) continue;
                    std::size_t w = 0;
                    for (std::size_t p = 0; p <= n; ++p) {
                        if (p == i + 1) continue;
                        w = w * d + (p == i ? k : t[p]);
                    }
                    b(w, col) += sign * a.at(t[i], t[i + 1], k);
                }
            }
        }
        return b;
    };
    auto s_map = [&](std::size_t n) {
        IntMat s(pow_size(d, n + 2), pow_size(d, n + 1));
        for (std::size_t col = 0; col < s.cols(); ++col)
            for (std::size_t k = 0; k < d; ++k)
                if (a.unit[k] != 0) s(k * pow_size(d, n + 1) + col, col) += a.unit[k];
        return s;
    };
    for (std::size_t n = 1; n < max_degree; ++n) {
        IntMat lhs = bprime(n + 1) * s_map(n) + s_map(n - 1) * bprime(n);
        if (!(lhs == IntMat::identity(pow_size(d, n + 1)))) return false;
    }
    return bprime(1) * s_map(0) == IntMat::identity(d);
}

AugmentedBarComplex augmented_group_bar_complex(const GammaGroup& gg, std::size_t max_degree,
                                                std::size_t budget) {
    const std::size_t d = gg.g.order();
    AugmentedBarComplex out;
    out.max_degree = max_degree;
    bool nontrivial = !gg.action.is_trivial();
    for (std::size_t n = 0; n <= max_degree; ++n) {
        std::size_t rank = pow_size(d, n);
        if (rank > budget)
            throw budget_error("group bar complex degree " + std::to_string(n) + " over budget");
        out.data.ranks.push_back(rank);
        std::vector<IntMat> ops;
        if (nontrivial)
            for (unsigned c = 0; c < gg.gamma.order(); ++c) {
                if (c == gg.gamma.identity()) continue;
                IntMat p(rank, rank);
                for (std::size_t t = 0; t < rank; ++t) {
                    auto tup = decode_tuple(t, n, d);
                    for (auto& x : tup) x = gg.act(c, x);
                    p(encode_tuple(tup, d), t) = 1;
                }
                ops.push_back(std::move(p));
            }
        out.data.action.push_back(std::move(ops));
    }
    out.data.boundary.resize(max_degree + 1);
    for (std::size_t n = 1; n <= max_degree; ++n) {
        IntMat b(out.data.ranks[n - 1], out.data.ranks[n]);
        for (std::size_t col = 0; col < b.cols(); ++col) {
            auto t = decode_tuple(col, n, d);
            // epsilon(g_1) (g_2..g_n)
            std::vector<unsigned> head(t.begin() + 1, t.end());
            b(encode_tuple(head, d), col) += 1;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                auto v = t;
                v[i] = gg.g.mul(t[i], t[i + 1]);
                v.erase(v.begin() + i + 1);
                b(encode_tuple(v, d), col) += (i % 2 == 0) ? -1 : 1;
            }
            std::vector<unsigned> tail(t.begin(), t.end() - 1);
            b(encode_tuple(tail, d), col) += (n % 2 == 0) ? 1 : -1;
        }
        out.data.boundary[n] = std::move(b);
    }
    if (!out.data.strictly_equivariant())
        throw invariant_error("group bar boundary is not gamma-equivariant");
    return out;
}

Case2Report case2_crosscheck(const GammaGroup& gg, std::size_t max_degree, std::size_t budget) {
    Case2Report rep;
    std::ostringstream detail;
    AugmentedBarComplex abc = augmented_group_bar_complex(gg, max_degree + 1, budget);
    ChainComplexZ hoch = coinvariant_complex(abc.data);
    hoch.validate();
    BarComplexGamma bar = build_bar_complex(gg, make_trivial_z(gg), max_degree + 1, budget);
    for (std::size_t n = 0; n <= max_degree; ++n) {
        rep.hochschild_side.push_back(hoch.homology(n));
        rep.bar_side.push_back(bar.homology(n));
        if (!(rep.hochschild_side.back() == rep.bar_side.back())) {
            rep.match = false;
            detail << "degree " << n << ": " << rep.hochschild_side.back().str() << " vs "
                   << rep.bar_side.back().str() << "; ";
        }
    }
    rep.detail = detail.str();
    return rep;
}

}  // namespace gammahom
