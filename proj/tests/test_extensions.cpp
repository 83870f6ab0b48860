#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammahom/extensions.hpp"

using namespace gammahom;

namespace {

FiniteModuleView trivial_view(const GammaGroup& gg, const Int& m) {
    return FiniteModuleView(make_trivial_cyclic(gg, m));
}

// Z/m with gamma = Z2 negating it, G acting trivially.
FiniteModuleView negated_view(const GammaGroup& gg, const Int& m) {
    EquivariantModule mod = make_trivial_cyclic(gg, m);
    mod.gamma_action[1] = IntMat{{Int(-1)}};
    return FiniteModuleView(mod);
}

FactorSet zero_factor_set(const GammaGroup& gg, FiniteModuleView view) {
    std::vector<std::vector<unsigned>> f(gg.g.order(),
                                         std::vector<unsigned>(gg.g.order(), view.zero()));
    return FactorSet{gg, std::move(view), std::move(f)};
}

}  // namespace

TEST_CASE("finite module view") {
    auto gg = GammaGroup::with_trivial_action(make_cyclic(2), make_cyclic(2));
    SUBCASE("Z/4 enumeration and arithmetic") {
        auto view = trivial_view(gg, 4);
        CHECK(view.size() == 4);
        for (unsigned a = 0; a < 4; ++a) {
            CHECK(view.add(a, view.zero()) == a);
            CHECK(view.add(a, view.neg(a)) == view.zero());
        }
        CHECK(isomorphic(view.as_group(), make_cyclic(4)));
    }
    SUBCASE("negation action on elements") {
        auto view = negated_view(gg, 4);
        for (unsigned a = 0; a < 4; ++a) CHECK(view.act_gamma(1, a) == view.neg(a));
    }
    SUBCASE("Z^2/<(2,0),(0,2)> is the klein four group") {
        IntMat rel{{Int(2), Int(0)}, {Int(0), Int(2)}};
        auto view = FiniteModuleView(make_trivial_module(gg, FPAbelianGroup(2, rel)));
        CHECK(view.size() == 4);
        CHECK(isomorphic(view.as_group(), make_klein_four()));
    }
    SUBCASE("infinite module rejected") {
        CHECK_THROWS_AS(FiniteModuleView(make_trivial_z(gg)), input_error);
    }
}

TEST_CASE("extensions from factor sets") {
    SUBCASE("zero factor set gives the split extension") {
        auto gg = GammaGroup::with_trivial_action(make_cyclic(2), make_cyclic(1));
        auto ext = extension_from_factor_set(zero_factor_set(gg, trivial_view(gg, 2)));
        CHECK(ext.total.g.order() == 4);
        CHECK(isomorphic(ext.total.g, make_klein_four()));
        CHECK(ext.section.has_value());
    }
    SUBCASE("G = A = Z/2 with f(1,1) = 1 gives Z/4") {
        auto gg = GammaGroup::with_trivial_action(make_cyclic(2), make_cyclic(1));
        auto fs = zero_factor_set(gg, trivial_view(gg, 2));
        fs.f[1][1] = 1;
        auto ext = extension_from_factor_set(fs);
        CHECK(isomorphic(ext.total.g, make_cyclic(4)));
    }
    SUBCASE("gamma-equivariant factor set over (Z3, inversion) with negated Z/3") {
        auto gg = cyclic_with_inversion(3);
        auto view = negated_view(gg, 3);
        // f(x,y) = x + y - (x+y mod 3) scaled: the classical carry cocycle is
        // equivariant for simultaneous negation; build by enumeration instead.
        auto res = enumerate_e1_gamma(gg, view);
        CHECK(res.match);
        for (const auto& fs : res.class_representatives) {
            auto ext = extension_from_factor_set(fs);
            CHECK(gamma_property_check(ext).via_injectivity ==
                  gamma_property_check(ext).via_injectivity);
        }
    }
}

TEST_CASE("gamma property") {
    SUBCASE("split extension with trivial gamma on kernel") {
        auto gg = cyclic_with_inversion(3);
        auto ext = extension_from_factor_set(zero_factor_set(gg, trivial_view(gg, 3)));
        auto rep = gamma_property_check(ext);
        CHECK(rep.via_injectivity);
        CHECK(rep.has_gamma_section);
        CHECK(rep.gamma_trivial_on_kernel);
        CHECK(rep.criteria_agree);
    }
    SUBCASE("nontrivial gamma on the kernel fails both criteria") {
        auto gg = GammaGroup::with_trivial_action(make_cyclic(2), make_cyclic(2));
        auto ext = extension_from_factor_set(zero_factor_set(gg, negated_view(gg, 4)));
        auto rep = gamma_property_check(ext);
        CHECK_FALSE(rep.via_injectivity);
        CHECK_FALSE(rep.gamma_trivial_on_kernel);
        CHECK(rep.criteria_agree);
    }
    SUBCASE("trivial gamma everywhere trivially passes") {
        auto gg = GammaGroup::with_trivial_action(make_cyclic(3), make_cyclic(1));
        auto ext = extension_from_factor_set(zero_factor_set(gg, trivial_view(gg, 2)));
        auto rep = gamma_property_check(ext);
        CHECK(rep.via_injectivity);
        CHECK(rep.criteria_agree);
    }
}

TEST_CASE("factor set round trip") {
    auto gg = GammaGroup::with_trivial_action(make_cyclic(2), make_cyclic(1));
    auto view = trivial_view(gg, 2);
    auto fs = zero_factor_set(gg, view);
    fs.f[1][1] = 1;
    auto ext = extension_from_factor_set(fs);
    auto back = factor_set_from_extension(ext, view);
    auto ext2 = extension_from_factor_set(back);
    CHECK(are_equivalent(ext, ext2));
    SUBCASE("split extension reads back as zero after normalization") {
        auto split = extension_from_factor_set(zero_factor_set(gg, view));
        auto fs0 = factor_set_from_extension(split, view);
        CHECK_FALSE(are_equivalent(split, ext));
        CHECK(are_equivalent(split, extension_from_factor_set(fs0)));
    }
}

TEST_CASE("equivalence is reflexive and separates classes") {
    auto gg = GammaGroup::with_trivial_action(make_cyclic(2), make_cyclic(1));
    auto view = trivial_view(gg, 2);
    auto split = extension_from_factor_set(zero_factor_set(gg, view));
    auto fs = zero_factor_set(gg, view);
    fs.f[1][1] = 1;
    auto twisted = extension_from_factor_set(fs);
    CHECK(are_equivalent(split, split));
    CHECK(are_equivalent(twisted, twisted));
    CHECK_FALSE(are_equivalent(split, twisted));  // Z2xZ2 vs Z4
}

TEST_CASE("E1 enumeration against the cochain pipeline") {
    SUBCASE("(Z2, Z/2, trivial gamma): two classes") {
        auto gg = GammaGroup::with_trivial_action(make_cyclic(2), make_cyclic(1));
        auto res = enumerate_e1_gamma(gg, trivial_view(gg, 2));
        CHECK(res.class_count == 2);
        CHECK(res.h2_order == 2);
        CHECK(res.match);
    }
    SUBCASE("(Z3, Z/3, trivial gamma): three classes") {
        auto gg = GammaGroup::with_trivial_action(make_cyclic(3), make_cyclic(1));
        auto res = enumerate_e1_gamma(gg, trivial_view(gg, 3));
        CHECK(res.class_count == 3);
        CHECK(res.match);
    }
    SUBCASE("(Z3 with inversion, Z/3 negated): counts match") {
        auto gg = cyclic_with_inversion(3);
        auto res = enumerate_e1_gamma(gg, negated_view(gg, 3));
        CHECK(res.match);
    }
    SUBCASE("A = 0: exactly one class") {
        auto gg = GammaGroup::with_trivial_action(make_cyclic(2), make_cyclic(1));
        auto res = enumerate_e1_gamma(gg, trivial_view(gg, 1));
        CHECK(res.class_count == 1);
        CHECK(res.match);
    }
    SUBCASE("cohomologous factor sets produce equivalent extensions") {
        auto gg = GammaGroup::with_trivial_action(make_cyclic(2), make_cyclic(1));
        auto view = trivial_view(gg, 4);
        auto res = enumerate_e1_gamma(gg, view);
        CHECK(res.match);
        // Representatives of distinct classes are pairwise inequivalent.
        for (std::size_t i = 0; i < res.class_representatives.size(); ++i)
            for (std::size_t j = i + 1; j < res.class_representatives.size(); ++j)
                CHECK_FALSE(are_equivalent(extension_from_factor_set(res.class_representatives[i]),
                                           extension_from_factor_set(res.class_representatives[j])));
    }
}

TEST_CASE("automorphism machinery") {
    auto s3 = make_symmetric(3);
    auto auts = automorphism_group(s3);
    CHECK(auts.size() == 6);
    CHECK(inner_automorphisms(s3).size() == 6);
    auto z4 = make_cyclic(4);
    CHECK(automorphism_group(z4).size() == 2);
    CHECK(inner_automorphisms(z4).size() == 1);
}

TEST_CASE("obstructions") {
    SUBCASE("abelian kernel: obstruction vanishes and extension exists") {
        auto gg = GammaGroup::with_trivial_action(make_cyclic(2), make_cyclic(1));
        auto z4 = make_cyclic(4);
        auto auts = automorphism_group(z4);  // {id, inversion}
        REQUIRE(auts.size() == 2);
        // psi sends the generator of Z2 to inversion.
        AbstractKernel ak{gg, z4, {auts[0], auts[1] == auts[0] ? auts[0] : auts[1]}};
        ak.validate();
        auto res = obstruction(ak);
        CHECK(res.lands_in_center);
        CHECK(res.gamma_map);
        CHECK(res.cocycle);
        CHECK(res.cocycle_via_complex);
        CHECK(res.class_is_zero);  // D4 realizes this kernel
        auto rep = obstruction_vanishes_iff_extension_exists(ak);
        CHECK(rep.extension_found);
        CHECK(rep.agree);
    }
    SUBCASE("J = S3, trivial center: obstruction group trivial, extension exists") {
        auto gg = GammaGroup::with_trivial_action(make_cyclic(2), make_cyclic(1));
        auto s3 = make_symmetric(3);
        auto auts = automorphism_group(s3);
        // Any automorphism class works; Out(S3) = 1 so psi(1) can be any.
        AbstractKernel ak{gg, s3, {auts[0], auts[1]}};
        ak.validate();
        auto res = obstruction(ak);
        CHECK(res.class_is_zero);
        CHECK(res.h3.is_trivial());  // center is trivial
        auto rep = obstruction_vanishes_iff_extension_exists(ak);
        CHECK(rep.extension_found);
        CHECK(rep.agree);
    }
    SUBCASE("choice independence under random re-lifts") {
        auto gg = GammaGroup::with_trivial_action(make_cyclic(2), make_cyclic(1));
        auto z4 = make_cyclic(4);
        auto auts = automorphism_group(z4);
        AbstractKernel ak{gg, z4, {auts[0], auts[1]}};
        CHECK(obstruction_choice_independent(ak, 10, 20240811));
    }
    SUBCASE("gamma-equivariant abstract kernel") {
        auto gg = cyclic_with_inversion(3);
        auto z2 = make_cyclic(2);
        auto auts = automorphism_group(z2);
        REQUIRE(auts.size() == 1);
        AbstractKernel ak{gg, z2, {auts[0], auts[0], auts[0]}};
        ak.validate();
        auto res = obstruction(ak);
        CHECK(res.class_is_zero);
        auto rep = obstruction_vanishes_iff_extension_exists(ak);
        CHECK(rep.agree);
    }
}

TEST_CASE("gamma property on randomized small extensions") {
    std::mt19937 rng(424242);
    int built = 0;
    for (int iter = 0; iter < 200 && built < 50; ++iter) {
        std::size_t gm = 2 + rng() % 3;               // |G| in 2..4
        Int am = Int(2 + rng() % 3);                  // |A| in 2..4
        bool invert_g = rng() % 2 == 0;
        bool negate_a = rng() % 2 == 0;
        GammaGroup gg = invert_g ? cyclic_with_inversion(gm)
                                 : GammaGroup::with_trivial_action(make_cyclic(gm), make_cyclic(2));
        EquivariantModule mod = make_trivial_cyclic(gg, am);
        if (negate_a) mod.gamma_action[1] = IntMat{{Int(-1)}};
        FiniteModuleView view(mod);
        E1Enumeration res;
        try {
            res = enumerate_e1_gamma(gg, view);
        } catch (const budget_error&) {
            continue;
        }
        for (const auto& fs : res.class_representatives) {
            auto ext = extension_from_factor_set(fs);
            auto rep = gamma_property_check(ext);
            CHECK(rep.criteria_agree);
            ++built;
        }
    }
    CHECK(built >= 50);
}
