#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammahom/group.hpp"

using namespace gammahom;

TEST_CASE("cyclic groups") {
    CHECK(make_cyclic(1).order() == 1);
    auto z4 = make_cyclic(4);
    CHECK(z4.mul(1, 3) == 0);
    CHECK(z4.inv(1) == 3);
    auto z6 = make_cyclic(6);
    CHECK(z6.element_order(1) == 6);
    CHECK(z6.element_order(2) == 3);
    CHECK_THROWS_AS(make_cyclic(0), input_error);
}

TEST_CASE("table validation") {
    SUBCASE("klein four group accepted, exponent 2") {
        auto v = make_klein_four();
        CHECK(v.order() == 4);
        CHECK(v.is_abelian());
        for (unsigned x = 0; x < 4; ++x) CHECK(v.mul(x, x) == v.identity());
    }
    SUBCASE("duplicate row rejected") {
        std::vector<std::vector<unsigned>> t{{0, 1}, {0, 1}};
        CHECK_THROWS_AS(make_from_table(t), input_error);
    }
    SUBCASE("S3 accepted and nonabelian") {
        auto s3 = make_symmetric(3);
        CHECK(s3.order() == 6);
        CHECK_FALSE(s3.is_abelian());
        bool found = false;  // scan for a nontrivial commutator
        for (unsigned a = 0; a < 6 && !found; ++a)
            for (unsigned b = 0; b < 6 && !found; ++b)
                found = s3.mul(s3.mul(a, b), s3.mul(s3.inv(a), s3.inv(b))) != s3.identity();
        CHECK(found);
    }
    SUBCASE("non-associative table rejected") {
        // A quasigroup table (Latin square) failing associativity.
        std::vector<std::vector<unsigned>> t{
            {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
        CHECK_THROWS_AS(make_from_table(t), input_error);
    }
}

TEST_CASE("semidirect products") {
    SUBCASE("trivial action gives direct product") {
        auto gg = GammaGroup::with_trivial_action(make_cyclic(3), make_cyclic(4));
        auto sd = semidirect_product(gg);
        CHECK(sd.group.order() == 12);
        CHECK(isomorphic(sd.group, direct_product(make_cyclic(3), make_cyclic(4))));
        CHECK(center(sd.group).order() == 12);
    }
    SUBCASE("Z3 x| Z2 by inversion is S3") {
        auto gg = cyclic_with_inversion(3);
        auto sd = semidirect_product(gg);
        CHECK(sd.group.order() == 6);
        CHECK_FALSE(sd.group.is_abelian());
        CHECK(isomorphic(sd.group, make_symmetric(3)));
        // Injections are homomorphisms by construction; check componentwise structure.
        CHECK(sd.g_part[sd.inject_g(2)] == 2);
        CHECK(sd.gamma_part[sd.inject_gamma(1)] == 1);
    }
    SUBCASE("order always multiplies") {
        for (std::size_t m : {2, 3, 5}) {
            auto gg = cyclic_with_inversion(m);
            CHECK(semidirect_product(gg).group.order() == 2 * m);
        }
    }
}

TEST_CASE("gamma commutant and gamma subgroup") {
    SUBCASE("trivial action reduces to commutator subgroup") {
        auto s3 = make_symmetric(3);
        auto gg = GammaGroup::with_trivial_action(s3, make_cyclic(2));
        CHECK(gamma_commutant(gg).members == commutator_subgroup(s3).members);
        CHECK(gamma_subgroup(gg).order() == 1);
    }
    SUBCASE("Z3 with inversion is gamma-perfect") {
        auto gg = cyclic_with_inversion(3);
        // gamma(g) g^{-1} = g^{-2} = g generates everything.
        CHECK(gamma_commutant(gg).is_whole_group());
        CHECK(gamma_subgroup(gg).is_whole_group());
        CHECK(is_gamma_perfect(gg));
    }
    SUBCASE("abelian with trivial gamma gives trivial commutant") {
        auto gg = GammaGroup::with_trivial_action(make_cyclic(5), make_cyclic(1));
        CHECK(gamma_commutant(gg).order() == 1);
        CHECK_FALSE(is_gamma_perfect(gg));
    }
    SUBCASE("Z4 with inversion: gamma subgroup is {0,2}") {
        auto gg = cyclic_with_inversion(4);
        auto s = gamma_subgroup(gg);
        CHECK(s.members == std::vector<unsigned>{0, 2});
        CHECK(gamma_commutant(gg).members == std::vector<unsigned>{0, 2});
    }
    SUBCASE("trivial group is gamma-perfect") {
        CHECK(is_gamma_perfect(GammaGroup::with_trivial_action(make_cyclic(1), make_cyclic(2))));
    }
}

TEST_CASE("relative commutator") {
    auto s3 = make_symmetric(3);
    SUBCASE("trivial H gives trivial subgroup") {
        auto gg = GammaGroup::with_trivial_action(s3, make_cyclic(2));
        Subgroup h(s3, {s3.identity()});
        CHECK(relative_commutator(gg, h).order() == 1);
    }
    SUBCASE("abelian G, trivial gamma gives trivial subgroup") {
        auto z6 = make_cyclic(6);
        auto gg = GammaGroup::with_trivial_action(z6, make_cyclic(1));
        Subgroup h(z6, {0, 2, 4});
        CHECK(relative_commutator(gg, h).order() == 1);
    }
    SUBCASE("conjugation action of S3 on itself, H = A3") {
        // S3 as a gamma-group over itself by conjugation.
        std::vector<std::vector<unsigned>> act(s3.order(), std::vector<unsigned>(s3.order()));
        for (unsigned c = 0; c < s3.order(); ++c)
            for (unsigned x = 0; x < s3.order(); ++x) act[c][x] = s3.conjugate(c, x);
        GammaGroup gg(s3, s3, GroupAction(s3, s3, act));
        std::vector<unsigned> a3;
        for (unsigned x = 0; x < s3.order(); ++x)
            if (s3.element_order(x) != 2) a3.push_back(x);
        Subgroup h(s3, a3);
        REQUIRE(h.order() == 3);
        auto rc = relative_commutator(gg, h);
        CHECK(rc.is_normal());
        // Contains the plain commutators [x, y], y in A3, so it is all of A3 here.
        CHECK(rc.members == h.members);
    }
    SUBCASE("non-normal H rejected") {
        auto gg = GammaGroup::with_trivial_action(s3, make_cyclic(1));
        unsigned refl = 0;
        for (unsigned x = 0; x < s3.order(); ++x)
            if (s3.element_order(x) == 2) refl = x;
        Subgroup h = closure(s3, {refl});
        CHECK_THROWS_AS(relative_commutator(gg, h), input_error);
    }
}

TEST_CASE("quotients") {
    SUBCASE("Z4 / {0,2} is Z2") {
        auto z4 = make_cyclic(4);
        auto q = quotient(z4, Subgroup(z4, {0, 2}));
        CHECK(q.group.order() == 2);
        CHECK(q.projection(1) != q.group.identity());
    }
    SUBCASE("G/G is trivial") {
        auto s3 = make_symmetric(3);
        std::vector<unsigned> all(6);
        for (unsigned i = 0; i < 6; ++i) all[i] = i;
        CHECK(quotient(s3, Subgroup(s3, all)).group.order() == 1);
    }
    SUBCASE("S3 / A3 is Z2") {
        auto s3 = make_symmetric(3);
        auto a3 = commutator_subgroup(s3);
        REQUIRE(a3.order() == 3);
        auto q = quotient(s3, a3);
        CHECK(isomorphic(q.group, make_cyclic(2)));
    }
}

TEST_CASE("projection to G_Gamma is a gamma-map for the induced action") {
    auto gg = cyclic_with_inversion(4);
    auto n = gamma_subgroup(gg);
    auto q = quotient(gg.g, n);
    // Induced action on cosets: well-defined because n is gamma-stable.
    for (unsigned c = 0; c < gg.gamma.order(); ++c) {
        for (unsigned x = 0; x < gg.g.order(); ++x) {
            unsigned lhs = q.projection(gg.act(c, x));
            unsigned rhs = q.projection(gg.act(c, q.coset_rep[q.projection(x)]));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("isomorphism testing") {
    CHECK(isomorphic(make_cyclic(6), direct_product(make_cyclic(2), make_cyclic(3))));
    CHECK_FALSE(isomorphic(make_cyclic(4), make_klein_four()));
    CHECK_FALSE(isomorphic(make_symmetric(3), make_cyclic(6)));
    CHECK(isomorphic(make_dihedral(3), make_symmetric(3)));
}
