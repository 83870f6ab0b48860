#include "gammahom/cyclic_rational.hpp"

#include <numeric>
#include <sstream>

namespace gammahom {

CyclicResolution build_resolution(std::size_t m) {
    if (m < 2) throw input_error("cyclic resolution needs m >= 2");
    IntMat shift(m, m);  // multiplication by t
    for (std::size_t i = 0; i < m; ++i) shift((i + 1) % m, i) = 1;

    CyclicResolution res;
    res.m = m;
    res.n_matrix = IntMat(m, m);
    res.d_matrix = IntMat(m, m);
    IntMat power = IntMat::identity(m);
    for (std::size_t j = 0; j < m; ++j) {
        res.n_matrix = res.n_matrix + power;
        if (j >= 1) res.d_matrix = res.d_matrix + power;
        power = shift * power;
    }
    res.d_matrix = res.d_matrix - IntMat::identity(m).scaled(Int(m - 1));
    res.augmentation = IntMat(1, m);
    for (std::size_t i = 0; i < m; ++i) res.augmentation(0, i) = 1;
    res.check();
    return res;
}

void CyclicResolution::check() const {
    if (!(d_matrix * n_matrix).is_zero()) throw invariant_error("cyclic resolution: DN != 0");
    if (!(n_matrix * d_matrix).is_zero()) throw invariant_error("cyclic resolution: ND != 0");
    if (!(augmentation * d_matrix).is_zero()) throw invariant_error("cyclic resolution: eps D != 0");
    std::size_t rd = rank_q(to_rational(d_matrix));
    std::size_t rn = rank_q(to_rational(n_matrix));
    if (rd + rn != m) throw invariant_error("cyclic resolution: rank(D) + rank(N) != m");
    if (rd != m - 1) throw invariant_error("cyclic resolution: rank(D) != m-1");
    // Witness for the -1/m section of Im D: D(-f/m) = f comes down to D^2 = -mD.
    if (!(d_matrix * d_matrix == d_matrix.scaled(Int(-(long long)m))))
        throw invariant_error("cyclic resolution: D^2 != -mD");
}

CyclicGammaAction::CyclicGammaAction(std::size_t m_, FiniteGroup gamma_, std::vector<unsigned> k_)
    : m(m_), gamma(std::move(gamma_)), k(std::move(k_)) {
    if (m < 1) throw input_error("cyclic action needs m >= 1");
    if (k.size() != gamma.order()) throw input_error("need one exponent per gamma element");
    for (unsigned c = 0; c < gamma.order(); ++c) {
        if (std::gcd<std::size_t>(k[c] % m, m) != 1) throw input_error("exponent not coprime to m");
        for (unsigned d = 0; d < gamma.order(); ++d)
            if ((static_cast<std::size_t>(k[c]) * k[d]) % m != k[gamma.mul(c, d)] % m)
                throw input_error("exponents do not define a homomorphism to (Z/m)^x");
    }
    if (k[gamma.identity()] % m != 1 % m) throw input_error("identity exponent must be 1");
}

bool CyclicGammaAction::nontrivial() const {
    for (unsigned c = 0; c < gamma.order(); ++c)
        if (k[c] % m != 1 % m) return true;
    return false;
}

IntMat CyclicGammaAction::permutation_matrix(unsigned c) const {
    IntMat p(m, m);
    for (std::size_t i = 0; i < m; ++i) p((i * k[c]) % m, i) = 1;
    return p;
}

GammaGroup CyclicGammaAction::gamma_group() const {
    std::vector<unsigned> kk(k);
    for (auto& x : kk) x %= static_cast<unsigned>(m);
    return cyclic_with_power_action(m, gamma, kk);
}

CompatibilityReport verify_gamma_compatibility(const CyclicResolution& res,
                                               const CyclicGammaAction& act) {
    CompatibilityReport rep;
    std::ostringstream detail;
    for (unsigned c = 0; c < act.gamma.order(); ++c) {
        IntMat p = act.permutation_matrix(c);
        if (!(p * res.d_matrix == res.d_matrix * p)) {
            rep.compatible = false;
            detail << "D does not commute with gamma element " << c << "; ";
        }
        if (!(p * res.n_matrix == res.n_matrix * p)) {
            rep.compatible = false;
            detail << "N does not commute with gamma element " << c << "; ";
        }
    }
    rep.detail = detail.str();
    return rep;
}

namespace {

struct InducedMaps {
    QuotientSpace w;  // Q ox A_Gamma
    QMat d, n;        // induced on the quotient
};

void require_same_gamma_group(const CyclicGammaAction& act, const EquivariantModule& coeff) {
    GammaGroup gg = act.gamma_group();
    if (!(coeff.gg.g == gg.g) || !(coeff.gg.gamma == gg.gamma) ||
        coeff.gg.action.act != gg.action.act)
        throw input_error("coefficient module is not over the cyclic gamma-group of the action");
}

InducedMaps induced_maps(const CyclicGammaAction& act, const EquivariantModule& coeff) {
    require_same_gamma_group(act, coeff);
    const std::size_t ra = coeff.base.n_generators;
    IntMat span = coeff.base.relations;
    IntMat id = IntMat::identity(ra);
    for (unsigned c = 0; c < act.gamma.order(); ++c)
        if (c != act.gamma.identity()) span = span.hcat(coeff.act_gamma(c) - id);

    IntMat d_a(ra, ra), n_a(ra, ra);
    for (std::size_t i = 0; i < act.m; ++i) {
        n_a = n_a + coeff.act_g(static_cast<unsigned>(i));
        if (i >= 1) d_a = d_a + coeff.act_g(static_cast<unsigned>(i));
    }
    d_a = d_a - id.scaled(Int(act.m - 1));

    InducedMaps im;
    im.w = quotient_space(ra, to_rational(span));
    // D and N are Gamma-invariant group-ring elements, so they descend; verify.
    if (span.cols() > 0) {
        if (!(im.w.proj * to_rational(d_a) * to_rational(span)).is_zero() ||
            !(im.w.proj * to_rational(n_a) * to_rational(span)).is_zero())
            throw invariant_error("induced map does not descend to gamma-coinvariants");
    }
    im.d = im.w.proj * to_rational(d_a) * im.w.section;
    im.n = im.w.proj * to_rational(n_a) * im.w.section;
    if (!(im.d * im.n).is_zero() || !(im.n * im.d).is_zero())
        throw invariant_error("induced D, N do not compose to zero");
    return im;
}

}  // namespace

RationalHomologyResult rational_homology(const CyclicGammaAction& act,
                                         const EquivariantModule& coeff, std::size_t n) {
    InducedMaps im = induced_maps(act, coeff);
    const QMat& d_out = (n == 0) ? QMat() : (n % 2 == 1 ? im.d : im.n);
    const QMat d_in = (n % 2 == 0) ? im.d : im.n;  // the map entering degree n

    QMat cycles = (n == 0) ? QMat::identity(im.w.dim) : nullspace_q(d_out);
    QuotientSpace modulo = quotient_space(im.w.dim, d_in);
    QMat reduced = modulo.proj * cycles;

    RationalHomologyResult res;
    res.dim = rank_q(reduced);
    // Pick cycle columns whose reductions are independent.
    QMat reps(im.w.dim, 0);
    QMat have(modulo.dim, 0);
    for (std::size_t j = 0; j < cycles.cols() && reps.cols() < res.dim; ++j) {
        QMat cand(modulo.dim, 1);
        for (std::size_t i = 0; i < modulo.dim; ++i) cand(i, 0) = reduced(i, j);
        if (have.cols() > 0 && in_column_span(have, cand)) continue;
        if (cand.is_zero()) continue;
        have = have.hcat(cand);
        QMat col(im.w.dim, 1);
        for (std::size_t i = 0; i < im.w.dim; ++i) col(i, 0) = cycles(i, j);
        reps = reps.hcat(col);
    }
    res.cycle_representatives = std::move(reps);
    return res;
}

std::size_t rational_cohomology(const CyclicGammaAction& act, const EquivariantModule& coeff,
                                std::size_t n) {
    require_same_gamma_group(act, coeff);
    const std::size_t ra = coeff.base.n_generators;
    // V = Q ox A, then U = V^Gamma.
    QuotientSpace v = quotient_space(ra, to_rational(coeff.base.relations));
    QMat stacked(0, v.dim);
    for (unsigned c = 0; c < act.gamma.order(); ++c) {
        if (c == act.gamma.identity()) continue;
        QMat g = v.proj * to_rational(coeff.act_gamma(c)) * v.section;
        stacked = stacked.vcat(g - QMat::identity(v.dim));
    }
    QMat u = stacked.rows() ? nullspace_q(stacked) : QMat::identity(v.dim);

    IntMat id = IntMat::identity(ra);
    IntMat d_a(ra, ra), n_a(ra, ra);
    for (std::size_t i = 0; i < act.m; ++i) {
        n_a = n_a + coeff.act_g(static_cast<unsigned>(i));
        if (i >= 1) d_a = d_a + coeff.act_g(static_cast<unsigned>(i));
    }
    d_a = d_a - id.scaled(Int(act.m - 1));

    auto restrict_to_u = [&](const IntMat& a) {
        QMat av = v.proj * to_rational(a) * v.section;
        auto x = solve_q(u, av * u);
        if (!x) throw invariant_error("operator does not preserve the invariants");
        return *x;
    };
    QMat d_u = restrict_to_u(d_a);
    QMat n_u = restrict_to_u(n_a);
    std::size_t dim_u = u.cols();
    std::size_t rank_d = rank_q(d_u), rank_n = rank_q(n_u);

    // 0 -> U -D-> U -N-> U -D-> ...: H^0 = ker D, odd = ker N / im D, even = ker D / im N.
    if (n == 0) return dim_u - rank_d;
    if (n % 2 == 1) return (dim_u - rank_n) - rank_d;
    return (dim_u - rank_d) - rank_n;
}

CrosscheckReport crosscheck_vs_rational_bar(const CyclicGammaAction& act,
                                            const EquivariantModule& coeff,
                                            std::size_t max_degree, std::size_t budget) {
    CrosscheckReport rep;
    GammaGroup gg = act.gamma_group();
    ChainComplexQ bar = build_bar_complex_q(gg, coeff, max_degree + 1, budget);
    std::ostringstream detail;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        std::size_t from_res = rational_homology(act, coeff, n).dim;
        std::size_t from_bar = bar.homology_dim(n);
        rep.resolution_dims.push_back(from_res);
        rep.bar_dims.push_back(from_bar);
        if (from_res != from_bar) {
            rep.match = false;
            detail << "degree " << n << ": resolution " << from_res << " vs bar " << from_bar << "; ";
        }
    }
    rep.detail = detail.str();
    return rep;
}

}  // namespace gammahom
