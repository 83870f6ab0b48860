#pragma once

#include <string>
#include <vector>

#include "gammahom/group.hpp"

namespace gammahom {

// Freely reduced word in a free group; letters are (generator, exponent +-1).
struct FreeWord {
    std::vector<std::pair<unsigned, int>> letters;

    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }
    auto operator<=>(const FreeWord&) const = default;
    std::string str() const;  // e.g. "x0 x1^-1"
};

FreeWord reduce_letters(std::vector<std::pair<unsigned, int>> letters);
FreeWord multiply(const FreeWord& a, const FreeWord& b);
FreeWord inverse(const FreeWord& a);
FreeWord generator_word(unsigned gen, int exponent = 1);

// Gamma permuting the free basis.
struct BasisAction {
    FiniteGroup gamma;
    std::vector<std::vector<unsigned>> perm;  // perm[c][generator]

    BasisAction(FiniteGroup gamma_, std::vector<std::vector<unsigned>> perm_);
    std::size_t rank() const { return perm.empty() ? 0 : perm[0].size(); }
};

FreeWord apply_gamma(const BasisAction& act, unsigned c, const FreeWord& w);

unsigned evaluate_word(const FiniteGroup& target, const std::vector<unsigned>& images,
                       const FreeWord& w);

// Reidemeister-Schreier data for the kernel of F -> target.
struct SchreierData {
    std::size_t rank_f = 0;
    FiniteGroup target;
    std::vector<unsigned> images;            // per generator
    std::vector<unsigned> cosets;            // elements of <images>, BFS order from identity
    std::vector<FreeWord> transversal;       // per coset, shortlex-minimal words
    std::vector<FreeWord> kernel_generators; // nontrivial Schreier generators
    std::size_t index = 0;
    std::size_t rank = 0;                    // = index (rank_f - 1) + 1, asserted
};

SchreierData schreier_kernel(std::size_t rank_f, const FiniteGroup& target,
                             const std::vector<unsigned>& images);

// Exhaustive search for reduced words fixed by every nontrivial gamma element,
// up to the given length; returns at most max_hits of them.
std::vector<FreeWord> fixed_word_search(const BasisAction& act, std::size_t maxlen,
                                        std::size_t max_hits = 16);

// Folded subgroup graph: membership and rank of a finitely generated subgroup.
class SubgroupGraph {
public:
    SubgroupGraph(std::size_t rank_f, const std::vector<FreeWord>& generators);
    bool contains(const FreeWord& w) const;
    std::size_t rank() const { return rank_; }

private:
    std::vector<std::vector<long>> adj_;  // vertex x signed label -> vertex (or -1)
    std::size_t rank_f_, rank_;
};

struct StableBasisReport {
    bool gamma_closed = false;
    bool size_matches_rank = false;
    bool freely_generates = false;  // folded rank equals the candidate count
    bool generates_kernel = false;  // every Schreier generator in the span
    bool verdict = false;
    std::string detail;
};
// Throws input_error when a candidate lies outside the kernel.
StableBasisReport gamma_stable_basis_check(const std::vector<FreeWord>& candidates,
                                           const BasisAction& act, const SchreierData& sd);

// The rank-2 swap example: kernel of F2 -> Z2 sending both generators to the
// nontrivial element, with gamma exchanging the generators. The conclusion
// "no gamma-stable basis exists" is derived from the two finite facts below,
// not decided over all bases.
struct SwapExampleReport {
    SchreierData sd;
    bool rank_is_odd = false;
    std::size_t fixed_words_found = 0;
    std::size_t search_length = 0;
    bool no_stable_basis_derived = false;  // rank odd and no nontrivial fixed word
};
SwapExampleReport swap_counterexample_report(std::size_t maxlen = 12);

// The rank-3 cyclic example: kernel of F3 -> Z2 x Z2 with gamma cycling the
// basis; exhibits a gamma-stable free basis of size 9.
struct CyclicExampleReport {
    SchreierData sd;
    std::vector<FreeWord> stable_basis;
    StableBasisReport check;
};
CyclicExampleReport cyclic_three_example();

}  // namespace gammahom
