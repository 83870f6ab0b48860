#include "gammahom/freegroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gammahom {

std::string FreeWord::str() const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        os << (i ? " " : "") << "x" << letters[i].first;
        if (letters[i].second < 0) os << "^-1";
    }
    return os.str();
}

FreeWord reduce_letters(std::vector<std::pair<unsigned, int>> letters) {
    std::vector<std::pair<unsigned, int>> out;
    for (const auto& l : letters) {
        if (l.second != 1 && l.second != -1) throw input_error("letter exponent must be +-1");
        if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
            out.pop_back();
        else
            out.push_back(l);
    }
    return {out};
}

FreeWord multiply(const FreeWord& a, const FreeWord& b) {
    std::vector<std::pair<unsigned, int>> letters = a.letters;
    letters.insert(letters.end(), b.letters.begin(), b.letters.end());
    return reduce_letters(std::move(letters));
}

FreeWord inverse(const FreeWord& a) {
    std::vector<std::pair<unsigned, int>> letters;
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
        letters.emplace_back(it->first, -it->second);
    return {letters};
}

FreeWord generator_word(unsigned gen, int exponent) {
    return reduce_letters({{gen, exponent}});
}

BasisAction::BasisAction(FiniteGroup gamma_, std::vector<std::vector<unsigned>> perm_)
    : gamma(std::move(gamma_)), perm(std::move(perm_)) {
    if (perm.size() != gamma.order()) throw input_error("need one permutation per gamma element");
    std::size_t r = perm.empty() ? 0 : perm[0].size();
    for (const auto& p : perm) {
        if (p.size() != r) throw input_error("basis permutations must share a rank");
        std::set<unsigned> seen(p.begin(), p.end());
        if (seen.size() != r) throw input_error("basis action value is not a permutation");
        for (unsigned x : p)
            if (x >= r) throw input_error("basis permutation out of range");
    }
    for (unsigned x = 0; x < r; ++x)
        if (perm[gamma.identity()][x] != x) throw input_error("identity must act trivially");
    for (unsigned c = 0; c < gamma.order(); ++c)
        for (unsigned d = 0; d < gamma.order(); ++d)
            for (unsigned x = 0; x < r; ++x)
                if (perm[gamma.mul(c, d)][x] != perm[c][perm[d][x]])
                    throw input_error("basis action violates the representation law");
}

FreeWord apply_gamma(const BasisAction& act, unsigned c, const FreeWord& w) {
    // Letterwise relabeling keeps the word reduced.
    std::vector<std::pair<unsigned, int>> letters = w.letters;
    for (auto& l : letters) l.first = act.perm[c][l.first];
    return {letters};
}

unsigned evaluate_word(const FiniteGroup& target, const std::vector<unsigned>& images,
                       const FreeWord& w) {
    unsigned v = target.identity();
    for (const auto& l : w.letters) {
        unsigned g = images[l.first];
        v = target.mul(v, l.second > 0 ? g : target.inv(g));
    }
    return v;
}

SchreierData schreier_kernel(std::size_t rank_f, const FiniteGroup& target,
                             const std::vector<unsigned>& images) {
    if (images.size() != rank_f) throw input_error("need one image per generator");
    for (unsigned x : images)
        if (x >= target.order()) throw input_error("image out of range");

    SchreierData sd{rank_f, target, images, {}, {}, {}, 0, 0};
    std::map<unsigned, std::size_t> coset_index;
    sd.cosets.push_back(target.identity());
    sd.transversal.push_back(FreeWord{});
    coset_index[target.identity()] = 0;
    // BFS in generator order, positive letter before negative.
    for (std::size_t i = 0; i < sd.cosets.size(); ++i) {
        for (unsigned g = 0; g < rank_f; ++g)
            for (int e : {1, -1}) {
                unsigned img = e > 0 ? images[g] : target.inv(images[g]);
                unsigned next = target.mul(sd.cosets[i], img);
                if (!coset_index.count(next)) {
                    coset_index[next] = sd.cosets.size();
                    sd.cosets.push_back(next);
                    sd.transversal.push_back(multiply(sd.transversal[i], generator_word(g, e)));
                }
            }
    }
    sd.index = sd.cosets.size();
    // Schreier generators t x (rep(t x))^{-1} over positive letters.
    for (std::size_t i = 0; i < sd.cosets.size(); ++i)
        for (unsigned g = 0; g < rank_f; ++g) {
            unsigned next = target.mul(sd.cosets[i], images[g]);
            FreeWord w = multiply(multiply(sd.transversal[i], generator_word(g)),
                                  inverse(sd.transversal[coset_index[next]]));
            if (!w.empty()) sd.kernel_generators.push_back(std::move(w));
        }
    sd.rank = sd.kernel_generators.size();
    if (sd.rank != sd.index * (rank_f - 1) + 1)
        throw invariant_error("Schreier rank formula violated");
    for (const auto& w : sd.kernel_generators)
        if (evaluate_word(target, images, w) != target.identity())
            throw invariant_error("Schreier generator does not map to the identity");
    return sd;
}

std::vector<FreeWord> fixed_word_search(const BasisAction& act, std::size_t maxlen,
                                        std::size_t max_hits) {
    std::vector<FreeWord> hits;
    std::vector<std::pair<unsigned, int>> stack;
    const std::size_t r = act.rank();

    auto fixed = [&]() {
        for (unsigned c = 0; c < act.gamma.order(); ++c) {
            if (c == act.gamma.identity()) continue;
            bool same = true;
            for (const auto& l : stack)
                if (act.perm[c][l.first] != l.first) {
                    same = false;
                    break;
                }
            if (!same) return false;
        }
        return true;
    };
    std::function<void()> dfs = [&]() {
        if (hits.size() >= max_hits) return;
        if (!stack.empty() && fixed()) hits.push_back(FreeWord{stack});
        if (stack.size() == maxlen) return;
        for (unsigned g = 0; g < r; ++g)
            for (int e : {1, -1}) {
                if (!stack.empty() && stack.back().first == g && stack.back().second == -e) continue;
                stack.emplace_back(g, e);
                dfs();
                stack.pop_back();
            }
    };
    dfs();
    return hits;
}

// ---------------------------------------------------------------- folding

SubgroupGraph::SubgroupGraph(std::size_t rank_f, const std::vector<FreeWord>& generators)
    : rank_f_(rank_f) {
    // Wedge of loops spelling the generators, then Stallings folding: identify
    // endpoints whenever two edges with the same label leave a common vertex.
    std::vector<int> parent{0};
    std::vector<std::tuple<int, long, int>> edges;  // (from, signed label, to)
    auto fresh = [&parent]() {
        parent.push_back(static_cast<int>(parent.size()));
        return static_cast<int>(parent.size()) - 1;
    };
    auto find = [&parent](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    const int base = 0;
    for (const auto& w : generators) {
        int cur = base;
        for (std::size_t i = 0; i < w.letters.size(); ++i) {
            long label = static_cast<long>(w.letters[i].first + 1) * w.letters[i].second;
            int next = (i + 1 == w.letters.size()) ? base : fresh();
            edges.emplace_back(cur, label, next);
            cur = next;
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::map<long, int>> adj(parent.size());
        for (const auto& [u0, label, v0] : edges) {
            int u = find(u0), v = find(v0);
            for (auto [from, lab, to] : {std::tuple<int, long, int>{u, label, v},
                                         std::tuple<int, long, int>{v, -label, u}}) {
                auto it = adj[from].find(lab);
                if (it == adj[from].end()) {
                    adj[from][lab] = to;
                } else if (it->second != to) {
                    parent[find(to)] = find(it->second);
                    changed = true;
                }
            }
            if (changed) break;
        }
    }
    // Deduplicate folded edges and compact vertices reachable from the base.
    std::set<std::tuple<int, long, int>> folded;
    for (const auto& [u, label, v] : edges) {
        if (label > 0)
            folded.insert({find(u), label, find(v)});
        else
            folded.insert({find(v), -label, find(u)});
    }
    std::map<int, std::size_t> id;
    id[find(base)] = 0;
    std::vector<int> order{find(base)};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (const auto& [u, label, v] : folded) {
            if (u == order[i] && !id.count(v)) {
                id[v] = order.size();
                order.push_back(v);
            }
            if (v == order[i] && !id.count(u)) {
                id[u] = order.size();
                order.push_back(u);
            }
        }
    adj_.assign(order.size(), std::vector<long>(2 * rank_f_, -1));
    for (const auto& [u, label, v] : folded) {
        unsigned gen = static_cast<unsigned>(label) - 1;
        adj_[id[u]][2 * gen] = static_cast<long>(id[v]);
        adj_[id[v]][2 * gen + 1] = static_cast<long>(id[u]);
    }
    rank_ = folded.size() + 1 - order.size();
}

bool SubgroupGraph::contains(const FreeWord& w) const {
    long v = 0;
    for (const auto& l : w.letters) {
        std::size_t slot = 2 * l.first + (l.second > 0 ? 0 : 1);
        v = adj_[static_cast<std::size_t>(v)][slot];
        if (v < 0) return false;
    }
    return v == 0;
}

StableBasisReport gamma_stable_basis_check(const std::vector<FreeWord>& candidates,
                                           const BasisAction& act, const SchreierData& sd) {
    for (const auto& w : candidates)
        if (evaluate_word(sd.target, sd.images, w) != sd.target.identity())
            throw input_error("candidate word lies outside the kernel: " + w.str());

    StableBasisReport rep;
    std::ostringstream detail;
    std::set<FreeWord> set(candidates.begin(), candidates.end());
    rep.gamma_closed = true;
    for (unsigned c = 0; c < act.gamma.order() && rep.gamma_closed; ++c)
        for (const auto& w : set)
            if (!set.count(apply_gamma(act, c, w))) {
                rep.gamma_closed = false;
                detail << "orbit of " << w.str() << " leaves the set; ";
                break;
            }
    rep.size_matches_rank = set.size() == sd.rank;

    SubgroupGraph graph(sd.rank_f, candidates);
    rep.freely_generates = graph.rank() == candidates.size();
    rep.generates_kernel = true;
    for (const auto& w : sd.kernel_generators)
        if (!graph.contains(w)) {
            rep.generates_kernel = false;
            detail << "Schreier generator " << w.str() << " not generated; ";
            break;
        }
    rep.verdict = rep.gamma_closed && rep.size_matches_rank && rep.freely_generates &&
                  rep.generates_kernel;
    rep.detail = detail.str();
    return rep;
}

SwapExampleReport swap_counterexample_report(std::size_t maxlen) {
    SwapExampleReport rep{schreier_kernel(2, make_cyclic(2), {1, 1}), false, 0, maxlen, false};
    rep.rank_is_odd = rep.sd.rank % 2 == 1;
    BasisAction act(make_cyclic(2), {{0, 1}, {1, 0}});
    rep.fixed_words_found = fixed_word_search(act, maxlen).size();
    rep.no_stable_basis_derived = rep.rank_is_odd && rep.fixed_words_found == 0;
    return rep;
}

CyclicExampleReport cyclic_three_example() {
    FiniteGroup v4 = make_klein_four();  // Z2 x Z2 with (a,b) at index 2a + b
    // x -> (1,0), y -> (0,1), z -> (1,1)
    SchreierData sd = schreier_kernel(3, v4, {2, 1, 3});
    BasisAction act(make_cyclic(3), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});

    // Close the Schreier generators under the basis action.
    std::set<FreeWord> closed(sd.kernel_generators.begin(), sd.kernel_generators.end());
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& w : std::vector<FreeWord>(closed.begin(), closed.end()))
            for (unsigned c = 0; c < act.gamma.order(); ++c)
                if (closed.insert(apply_gamma(act, c, w)).second) grew = true;
    }
    CyclicExampleReport rep{std::move(sd), {closed.begin(), closed.end()}, {}};
    rep.check = gamma_stable_basis_check(rep.stable_basis, act, rep.sd);
    return rep;
}

}  // namespace gammahom
