#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gammahom/freegroup.hpp"

using namespace gammahom;

namespace {

FreeWord random_word(std::mt19937& rng, unsigned rank, std::size_t len) {
    std::vector<std::pair<unsigned, int>> letters;
    for (std::size_t i = 0; i < len; ++i)
        letters.emplace_back(rng() % rank, rng() % 2 ? 1 : -1);
    return reduce_letters(std::move(letters));
}

}  // namespace

TEST_CASE("word arithmetic") {
    FreeWord x = generator_word(0), y = generator_word(1);
    CHECK(multiply(x, inverse(x)).empty());
    CHECK(multiply(multiply(x, inverse(x)), y) == y);
    CHECK(inverse(multiply(x, y)) == multiply(inverse(y), inverse(x)));
    SUBCASE("free reduction is confluent on random insert-cancel round trips") {
        std::mt19937 rng(99);
        for (int iter = 0; iter < 200; ++iter) {
            FreeWord w = random_word(rng, 3, rng() % 12);
            // Insert u u^{-1} at the end and cancel: same element.
            FreeWord u = random_word(rng, 3, rng() % 6);
            CHECK(multiply(multiply(w, u), inverse(u)) == w);
        }
    }
}

TEST_CASE("basis actions") {
    BasisAction swap(make_cyclic(2), {{0, 1}, {1, 0}});
    FreeWord xy = multiply(generator_word(0), generator_word(1));
    CHECK(apply_gamma(swap, 1, xy) == multiply(generator_word(1), generator_word(0)));
    CHECK(apply_gamma(swap, 0, xy) == xy);
    SUBCASE("action respects multiplication") {
        std::mt19937 rng(7);
        for (int iter = 0; iter < 100; ++iter) {
            FreeWord a = random_word(rng, 2, rng() % 8), b = random_word(rng, 2, rng() % 8);
            CHECK(apply_gamma(swap, 1, multiply(a, b)) ==
                  multiply(apply_gamma(swap, 1, a), apply_gamma(swap, 1, b)));
            CHECK(apply_gamma(swap, 1, inverse(a)) == inverse(apply_gamma(swap, 1, a)));
        }
    }
}

TEST_CASE("schreier kernels") {
    SUBCASE("F2 -> Z2, both generators nontrivial: index 2, rank 3") {
        auto sd = schreier_kernel(2, make_cyclic(2), {1, 1});
        CHECK(sd.index == 2);
        CHECK(sd.rank == 3);
        for (const auto& w : sd.kernel_generators)
            CHECK(evaluate_word(sd.target, sd.images, w) == sd.target.identity());
    }
    SUBCASE("F3 -> Z2 x Z2: index 4, rank 9") {
        auto sd = schreier_kernel(3, make_klein_four(), {2, 1, 3});
        CHECK(sd.index == 4);
        CHECK(sd.rank == 9);
    }
    SUBCASE("trivial images: kernel is everything") {
        auto sd = schreier_kernel(2, make_cyclic(3), {0, 0});
        CHECK(sd.index == 1);
        CHECK(sd.rank == 2);
    }
    SUBCASE("rank formula on a sweep") {
        for (std::size_t m : {2, 3, 4, 5}) {
            auto sd = schreier_kernel(2, make_cyclic(m), {1, 1});
            CHECK(sd.rank == sd.index * 1 + 1);
        }
    }
}

TEST_CASE("fixed word search") {
    SUBCASE("swap action: only the empty word is fixed") {
        BasisAction swap(make_cyclic(2), {{0, 1}, {1, 0}});
        CHECK(fixed_word_search(swap, 10).empty());
    }
    SUBCASE("trivial action fixes everything") {
        BasisAction triv(make_cyclic(1), {{0, 1}});
        CHECK(fixed_word_search(triv, 3, 5).size() == 5);  // capped
    }
    SUBCASE("3-cycle on three generators: none fixed up to length 8") {
        BasisAction rot(make_cyclic(3), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
        CHECK(fixed_word_search(rot, 8).empty());
    }
}

TEST_CASE("subgroup graphs") {
    SUBCASE("membership in <x^2, y> inside F2") {
        SubgroupGraph g(2, {multiply(generator_word(0), generator_word(0)), generator_word(1)});
        CHECK(g.contains(generator_word(1)));
        CHECK(g.contains(multiply(generator_word(0), generator_word(0))));
        CHECK_FALSE(g.contains(generator_word(0)));
        CHECK(g.rank() == 2);
    }
    SUBCASE("dependent generators fold away") {
        FreeWord x = generator_word(0);
        SubgroupGraph g(2, {x, x, inverse(x)});
        CHECK(g.rank() == 1);
    }
}

TEST_CASE("swap counterexample") {
    auto rep = swap_counterexample_report(12);
    CHECK(rep.sd.rank == 3);
    CHECK(rep.rank_is_odd);
    CHECK(rep.fixed_words_found == 0);
    CHECK(rep.no_stable_basis_derived);
    SUBCASE("no Schreier basis here is gamma-stable") {
        BasisAction swap(make_cyclic(2), {{0, 1}, {1, 0}});
        auto check = gamma_stable_basis_check(rep.sd.kernel_generators, swap, rep.sd);
        CHECK(check.freely_generates);
        CHECK(check.generates_kernel);
        CHECK_FALSE(check.gamma_closed);
        CHECK_FALSE(check.verdict);
    }
}

TEST_CASE("cyclic three-generator example") {
    auto rep = cyclic_three_example();
    CHECK(rep.sd.rank == 9);
    CHECK(rep.stable_basis.size() == 9);
    CHECK(rep.check.gamma_closed);
    CHECK(rep.check.size_matches_rank);
    CHECK(rep.check.freely_generates);
    CHECK(rep.check.generates_kernel);
    CHECK(rep.check.verdict);
    SUBCASE("trivial action: any Schreier basis is stable") {
        BasisAction triv(make_cyclic(1), {{0, 1, 2}});
        auto check = gamma_stable_basis_check(rep.sd.kernel_generators, triv, rep.sd);
        CHECK(check.verdict);
    }
    SUBCASE("outside words rejected") {
        BasisAction rot(make_cyclic(3), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
        CHECK_THROWS_AS(gamma_stable_basis_check({generator_word(0)}, rot, rep.sd), input_error);
    }
}
