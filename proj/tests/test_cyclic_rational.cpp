#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gammahom/cyclic_rational.hpp"

using namespace gammahom;

namespace {

CyclicGammaAction power_action(std::size_t m, unsigned k) {
    // Gamma = cyclic of the multiplicative order of k mod m.
    unsigned ord = 1;
    std::size_t x = k % m;
    while (x != 1 % m) {
        x = (x * k) % m;
        ++ord;
    }
    std::vector<unsigned> ks(ord);
    std::size_t cur = 1;
    for (unsigned i = 0; i < ord; ++i) {
        ks[i] = static_cast<unsigned>(cur % m);
        cur = (cur * k) % m;
    }
    return CyclicGammaAction(m, make_cyclic(ord), ks);
}

}  // namespace

TEST_CASE("resolution matrices") {
    SUBCASE("m = 2 specialization") {
        auto res = build_resolution(2);
        CHECK(res.d_matrix == IntMat{{Int(-1), Int(1)}, {Int(1), Int(-1)}});
        CHECK(res.n_matrix == IntMat{{Int(1), Int(1)}, {Int(1), Int(1)}});
    }
    SUBCASE("identities and exactness ranks for m = 2..12") {
        for (std::size_t m = 2; m <= 12; ++m) {
            auto res = build_resolution(m);  // ctor runs check()
            CHECK(res.m == m);
            CHECK(rank_q(to_rational(res.d_matrix)) + rank_q(to_rational(res.n_matrix)) == m);
        }
    }
    SUBCASE("m < 2 rejected") { CHECK_THROWS_AS(build_resolution(1), input_error); }
}

TEST_CASE("gamma compatibility of D and N") {
    SUBCASE("m=3, k=2") {
        CHECK(verify_gamma_compatibility(build_resolution(3), power_action(3, 2)).compatible);
    }
    SUBCASE("m=5, k=2") {
        CHECK(verify_gamma_compatibility(build_resolution(5), power_action(5, 2)).compatible);
    }
    SUBCASE("trivial action always compatible") {
        for (std::size_t m = 2; m <= 6; ++m)
            CHECK(verify_gamma_compatibility(build_resolution(m), power_action(m, 1)).compatible);
    }
    SUBCASE("all coprime exponents for m <= 12") {
        for (std::size_t m = 2; m <= 12; ++m) {
            auto res = build_resolution(m);
            for (unsigned k = 1; k < m; ++k) {
                if (std::gcd<std::size_t>(k, m) != 1) continue;
                CHECK(verify_gamma_compatibility(res, power_action(m, k)).compatible);
            }
        }
    }
}

TEST_CASE("rational homology via the resolution") {
    SUBCASE("m=3, k=2, trivial rational coefficients") {
        auto act = power_action(3, 2);
        auto coeff = make_trivial_z(act.gamma_group());
        CHECK(rational_homology(act, coeff, 0).dim == 1);
        CHECK(rational_homology(act, coeff, 1).dim == 0);
        CHECK(rational_homology(act, coeff, 2).dim == 0);
    }
    SUBCASE("degree 0 equals dim of rational full coinvariants") {
        for (auto [m, k] : std::vector<std::pair<std::size_t, unsigned>>{{3, 2}, {4, 3}, {5, 2}}) {
            auto act = power_action(m, k);
            auto gg = act.gamma_group();
            for (const EquivariantModule& coeff : {make_trivial_z(gg), group_ring_module(gg)}) {
                auto h0 = rational_homology(act, coeff, 0);
                CHECK(h0.dim == full_coinvariants(coeff).invariants().free_rank);
            }
        }
    }
    SUBCASE("2-periodicity for n >= 1 on the regular module") {
        auto act = power_action(3, 2);
        auto coeff = group_ring_module(act.gamma_group());
        for (std::size_t n = 1; n + 2 <= 7; ++n)
            CHECK(rational_homology(act, coeff, n).dim == rational_homology(act, coeff, n + 2).dim);
    }
}

TEST_CASE("rational cohomology via the dual complex") {
    SUBCASE("trivial coefficients") {
        auto act = power_action(3, 2);
        auto coeff = make_trivial_z(act.gamma_group());
        CHECK(rational_cohomology(act, coeff, 0) == 1);
        CHECK(rational_cohomology(act, coeff, 1) == 0);  // N^* = x m invertible
        CHECK(rational_cohomology(act, coeff, 2) == 0);
    }
    SUBCASE("periodicity for n >= 1") {
        for (auto [m, k] : std::vector<std::pair<std::size_t, unsigned>>{{3, 2}, {4, 3}, {5, 2}}) {
            auto act = power_action(m, k);
            auto gg = act.gamma_group();
            for (const EquivariantModule& coeff : {make_trivial_z(gg), group_ring_module(gg)}) {
                for (std::size_t n = 1; n + 2 <= 6; ++n)
                    CHECK(rational_cohomology(act, coeff, n) ==
                          rational_cohomology(act, coeff, n + 2));
            }
        }
    }
}

TEST_CASE("crosscheck against the rational bar complex") {
    SUBCASE("m=3, k=2, trivial coefficients, degrees <= 4") {
        auto act = power_action(3, 2);
        auto rep = crosscheck_vs_rational_bar(act, make_trivial_z(act.gamma_group()), 4);
        CHECK(rep.match);
    }
    SUBCASE("m=4, k=3, regular module, degrees <= 3") {
        auto act = power_action(4, 3);
        auto rep = crosscheck_vs_rational_bar(act, group_ring_module(act.gamma_group()), 3);
        CHECK(rep.match);
    }
}
