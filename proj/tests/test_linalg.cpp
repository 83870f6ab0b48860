#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gammahom/chain.hpp"

using namespace gammahom;

namespace {

// Independent oracle for invariant factors: d_1...d_k = gcds of k x k minors.
// Exponential in size, used on tiny matrices only.
std::vector<Int> minor_gcd_invariants(const IntMat& a) {
    std::size_t n = std::min(a.rows(), a.cols());
    std::vector<Int> gcds(n + 1);
    gcds[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Int g = 0;
        std::vector<std::size_t> rs(k), cs(k);
        // Iterate over all k-subsets of rows and columns.
        std::vector<std::size_t> ri(k), ci(k);
        for (std::size_t i = 0; i < k; ++i) ri[i] = i;
        for (;;) {
            for (std::size_t i = 0; i < k; ++i) ci[i] = i;
            for (;;) {
                IntMat sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(ri[i], ci[j]);
                g = gcd(g, determinant(sub));
                // next column subset
                std::size_t p = k;
                while (p > 0 && ci[p - 1] == a.cols() - k + p - 1) --p;
                if (p == 0) break;
                ++ci[p - 1];
                for (std::size_t q = p; q < k; ++q) ci[q] = ci[q - 1] + 1;
            }
            std::size_t p = k;
            while (p > 0 && ri[p - 1] == a.rows() - k + p - 1) --p;
            if (p == 0) break;
            ++ri[p - 1];
            for (std::size_t q = p; q < k; ++q) ri[q] = ri[q - 1] + 1;
        }
        gcds[k] = g;
        if (g == 0) break;
    }
    std::vector<Int> inv;
    for (std::size_t k = 1; k <= n && gcds[k] != 0; ++k) inv.push_back(gcds[k] / gcds[k - 1]);
    return inv;
}

IntMat random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> d(-9, 9);
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
    SUBCASE("identity") {
        auto s = smith_normal_form(IntMat::identity(3));
        s.check(IntMat::identity(3));
        CHECK(s.d == IntMat::identity(3));
        CHECK(s.rank == 3);
    }
    SUBCASE("zero matrix") {
        IntMat z(2, 3);
        auto s = smith_normal_form(z);
        s.check(z);
        CHECK(s.d.is_zero());
        CHECK(s.rank == 0);
    }
    SUBCASE("2x2 with invariant factors 2,4") {
        IntMat a{{Int(2), Int(4)}, {Int(6), Int(8)}};
        auto s = smith_normal_form(a);
        s.check(a);
        auto f = s.invariant_factors();
        REQUIRE(f.size() == 2);
        CHECK(f[0] == 2);
        CHECK(f[1] == 4);
        CHECK(f[0] * f[1] == abs(determinant(a)));
        CHECK(minor_gcd_invariants(a) == f);
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    for (int iter = 0; iter < 40; ++iter) {
        IntMat a = random_matrix(rng, dim(rng), dim(rng));
        auto s = smith_normal_form(a);
        s.check(a);  // u*a*v = d, unimodularity, divisibility chain
    }
    // Against the minor-gcd oracle on small sizes.
    std::uniform_int_distribution<std::size_t> small(1, 4);
    for (int iter = 0; iter < 25; ++iter) {
        IntMat a = random_matrix(rng, small(rng), small(rng));
        CHECK(smith_normal_form(a).invariant_factors() == minor_gcd_invariants(a));
    }
}

TEST_CASE("kernel basis and integer solving") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        IntMat a = random_matrix(rng, dim(rng), dim(rng));
        IntMat k = kernel_basis(a);
        CHECK((a * k).is_zero());
        CHECK(rank_q(to_rational(k)) == k.cols());  // independent columns
        // Solving a x = a y recovers something mapping to the same value.
        IntMat y = random_matrix(rng, a.cols(), 1);
        SmithSolver solver(a);
        auto x = solver.solve(a * y);
        REQUIRE(x.has_value());
        CHECK(a * *x == a * y);
    }
}

TEST_CASE("fp abelian group invariants") {
    CHECK(FPAbelianGroup::free_group(2).invariants() == AbelianInvariants{2, {}});
    CHECK(FPAbelianGroup::cyclic(6).invariants() == AbelianInvariants{0, {Int(6)}});
    CHECK(FPAbelianGroup::cyclic(1).invariants().is_trivial());
    // Z^2 / <(2,0),(0,3)> has invariants Z/6 after chaining.
    IntMat rel{{Int(2), Int(0)}, {Int(0), Int(3)}};
    auto inv = FPAbelianGroup(2, rel).invariants();
    CHECK(inv == AbelianInvariants{0, {Int(6)}});
    CHECK(inv.str() == "Z/6");
}

TEST_CASE("kernel image cokernel of maps") {
    auto z = FPAbelianGroup::free_group(1);
    SUBCASE("kernel of x2 on Z is trivial") {
        AbelianMap f(z, z, IntMat{{Int(2)}});
        CHECK(kernel(f).group.invariants().is_trivial());
        CHECK(image(f).group.invariants() == AbelianInvariants{1, {}});
    }
    SUBCASE("cokernel of x6 on Z is Z/6") {
        AbelianMap f(z, z, IntMat{{Int(6)}});
        CHECK(cokernel(f).group.invariants() == AbelianInvariants{0, {Int(6)}});
    }
    SUBCASE("kernel of x2 on Z/4 is Z/2") {
        auto z4 = FPAbelianGroup::cyclic(4);
        AbelianMap f(z4, z4, IntMat{{Int(2)}});
        CHECK(f.well_defined());
        auto k = kernel(f);
        CHECK(k.group.invariants() == AbelianInvariants{0, {Int(2)}});
        // Exhaustive oracle on the 4 elements of Z/4: x with 2x = 0 mod 4.
        int count = 0;
        for (int x = 0; x < 4; ++x)
            if ((2 * x) % 4 == 0) ++count;
        CHECK(Int(count) == k.group.invariants().order());
        // Inclusion followed by f is zero.
        CHECK(compose(f, k.inclusion).is_zero_map());
    }
    SUBCASE("rank additivity in the free case") {
        std::mt19937 rng(99);
        for (int iter = 0; iter < 20; ++iter) {
            std::uniform_int_distribution<std::size_t> dim(1, 5);
            std::size_t r = dim(rng), c = dim(rng);
            IntMat m = random_matrix(rng, r, c);
            AbelianMap f(FPAbelianGroup::free_group(c), FPAbelianGroup::free_group(r), m);
            auto kf = kernel(f).group.invariants();
            auto im = image(f).group.invariants();
            CHECK(kf.free_rank + im.free_rank == c);
        }
    }
}

TEST_CASE("homology of integer chain complexes") {
    auto z = FPAbelianGroup::free_group(1);
    SUBCASE("zero map complex") {
        ChainComplexZ c;
        c.groups = {z, z};
        c.boundary = {IntMat(), IntMat{{Int(0)}}};
        c.validate();
        CHECK(c.homology(1) == AbelianInvariants{1, {}});
        CHECK(c.homology(0) == AbelianInvariants{1, {}});
        CHECK(c.homology(5).is_trivial());  // out of range = zero group
    }
    SUBCASE("multiplication by m") {
        ChainComplexZ c;
        c.groups = {z, z};
        c.boundary = {IntMat(), IntMat{{Int(5)}}};
        c.validate();
        CHECK(c.homology(0) == AbelianInvariants{0, {Int(5)}});
        CHECK(c.homology(1).is_trivial());
    }
    SUBCASE("periodic resolution of Z/2 with trivial Z coefficients") {
        // Z <-2- Z <-0- Z <-2- Z, the classical complex computing H_*(Z/2).
        ChainComplexZ c;
        c.groups = {z, z, z, z};
        c.boundary = {IntMat(), IntMat{{Int(2)}}, IntMat{{Int(0)}}, IntMat{{Int(2)}}};
        c.validate();
        CHECK(c.homology(0) == AbelianInvariants{0, {Int(2)}});  // coefficients already tensored
        CHECK(c.homology(1).is_trivial());
        CHECK(c.homology(2) == AbelianInvariants{0, {Int(2)}});
    }
}

TEST_CASE("rational complexes and quotient spaces") {
    SUBCASE("zero and identity boundaries") {
        ChainComplexQ c;
        c.dims = {1, 1};
        c.boundary = {QMat(), QMat{{Rat(0)}}};
        CHECK(c.homology_dim(1) == 1);
        c.boundary[1] = QMat{{Rat(1)}};
        CHECK(c.homology_dim(1) == 0);
        CHECK(c.homology_dim(0) == 0);
    }
    SUBCASE("quotient space projection/section identities") {
        std::mt19937 rng(3);
        for (int iter = 0; iter < 20; ++iter) {
            std::uniform_int_distribution<std::size_t> dim(1, 6);
            std::size_t n = dim(rng);
            QMat s = to_rational(random_matrix(rng, n, dim(rng) % (n + 1)));
            auto q = quotient_space(n, s);
            CHECK(q.dim == n - rank_q(s));
            CHECK(q.proj * q.section == QMat::identity(q.dim));
            if (s.cols() > 0) CHECK((q.proj * s).is_zero());
        }
    }
}

TEST_CASE("subquotient presentations") {
    // <(2,0),(0,1)> / <(4,0)> inside Z^2 is Z/2 + Z.
    IntMat w{{Int(2), Int(0)}, {Int(0), Int(1)}};
    IntMat m{{Int(4)}, {Int(0)}};
    CHECK(subquotient(w, m).invariants() == AbelianInvariants{1, {Int(2)}});
}
