#include "gammahom/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gammahom {

FiniteGroup::FiniteGroup(std::vector<std::vector<unsigned>> table, std::vector<std::string> names)
    : n_(table.size()), table_(std::move(table)), names_(std::move(names)) {
    if (n_ == 0) throw input_error("group table is empty");
    for (const auto& row : table_) {
        if (row.size() != n_) throw input_error("group table is not square");
        for (unsigned x : row)
            if (x >= n_) throw input_error("group table entry out of range");
    }
    // Rows and columns must be permutations (cancellation).
    for (std::size_t i = 0; i < n_; ++i) {
        std::vector<bool> seen_row(n_, false), seen_col(n_, false);
        for (std::size_t j = 0; j < n_; ++j) {
            if (seen_row[table_[i][j]]) throw input_error("group table row " + std::to_string(i) + " is not a bijection");
            seen_row[table_[i][j]] = true;
            if (seen_col[table_[j][i]]) throw input_error("group table column " + std::to_string(i) + " is not a bijection");
            seen_col[table_[j][i]] = true;
        }
    }
    // Identity.
    bool found = false;
    for (unsigned e = 0; e < n_; ++e) {
        bool ok = true;
        for (unsigned x = 0; x < n_ && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) {
            e_ = e;
            found = true;
            break;
        }
    }
    if (!found) throw input_error("group table has no identity element");
    // Two-sided inverses.
    inv_.assign(n_, 0);
    for (unsigned x = 0; x < n_; ++x) {
        bool ok = false;
        for (unsigned y = 0; y < n_; ++y)
            if (table_[x][y] == e_ && table_[y][x] == e_) {
                inv_[x] = y;
                ok = true;
                break;
            }
        if (!ok) throw input_error("element " + std::to_string(x) + " has no two-sided inverse");
    }
    // Associativity, exhaustively.
    for (unsigned a = 0; a < n_; ++a)
        for (unsigned b = 0; b < n_; ++b)
            for (unsigned c = 0; c < n_; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw input_error("group table is not associative at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
    if (names_.empty()) {
        names_.resize(n_);
        for (unsigned x = 0; x < n_; ++x) names_[x] = "g" + std::to_string(x);
    } else if (names_.size() != n_) {
        throw input_error("element name count mismatch");
    }
}

unsigned FiniteGroup::element_order(unsigned a) const {
    unsigned x = a, k = 1;
    while (x != e_) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (unsigned a = 0; a < n_; ++a)
        for (unsigned b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

FiniteGroup make_cyclic(std::size_t m) {
    if (m == 0) throw input_error("cyclic group order must be positive");
    std::vector<std::vector<unsigned>> t(m, std::vector<unsigned>(m));
    std::vector<std::string> names(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) t[i][j] = static_cast<unsigned>((i + j) % m);
        names[i] = "t^" + std::to_string(i);
    }
    return FiniteGroup(std::move(t), std::move(names));
}

FiniteGroup make_symmetric(unsigned n) {
    if (n == 0 || n > 6) throw input_error("symmetric group supported for 1 <= n <= 6");
    std::vector<std::vector<unsigned>> perms;
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0u);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<unsigned>, unsigned> index;
    for (unsigned i = 0; i < perms.size(); ++i) index[perms[i]] = i;
    std::size_t m = perms.size();
    std::vector<std::vector<unsigned>> t(m, std::vector<unsigned>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<unsigned> comp(n);
            for (unsigned k = 0; k < n; ++k) comp[k] = perms[i][perms[j][k]];
            t[i][j] = index[comp];
        }
    return FiniteGroup(std::move(t));
}

FiniteGroup make_dihedral(unsigned n) {
    if (n == 0) throw input_error("dihedral parameter must be positive");
    // Elements r^i s^e, index = i + n*e; s r = r^{-1} s.
    std::size_t m = 2 * n;
    auto idx = [n](unsigned i, unsigned e) { return i + n * e; };
    std::vector<std::vector<unsigned>> t(m, std::vector<unsigned>(m));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned e = 0; e < 2; ++e)
            for (unsigned j = 0; j < n; ++j)
                for (unsigned f = 0; f < 2; ++f) {
                    unsigned rot = e ? (i + n - j) % n : (i + j) % n;
                    t[idx(i, e)][idx(j, f)] = idx(rot, e ^ f);
                }
    return FiniteGroup(std::move(t));
}

FiniteGroup make_from_table(const std::vector<std::vector<unsigned>>& table) {
    return FiniteGroup(table);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    std::size_t m = a.order() * b.order();
    auto idx = [&](unsigned x, unsigned y) { return x * b.order() + y; };
    std::vector<std::vector<unsigned>> t(m, std::vector<unsigned>(m));
    for (unsigned x = 0; x < a.order(); ++x)
        for (unsigned y = 0; y < b.order(); ++y)
            for (unsigned u = 0; u < a.order(); ++u)
                for (unsigned v = 0; v < b.order(); ++v)
                    t[idx(x, y)][idx(u, v)] = idx(a.mul(x, u), b.mul(y, v));
    return FiniteGroup(std::move(t));
}

FiniteGroup make_klein_four() {
    return direct_product(make_cyclic(2), make_cyclic(2));
}

GroupHom::GroupHom(FiniteGroup src, FiniteGroup tgt, std::vector<unsigned> imgs)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
    if (images.size() != source.order()) throw input_error("homomorphism image list has wrong length");
    if (!is_homomorphism(source, target, images)) throw input_error("map is not a homomorphism");
}

bool GroupHom::is_injective() const {
    std::set<unsigned> seen(images.begin(), images.end());
    return seen.size() == source.order();
}

bool GroupHom::is_surjective() const {
    std::set<unsigned> seen(images.begin(), images.end());
    return seen.size() == target.order();
}

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& tgt,
                     const std::vector<unsigned>& images) {
    if (images.size() != src.order()) return false;
    for (unsigned x : images)
        if (x >= tgt.order()) return false;
    if (images[src.identity()] != tgt.identity()) return false;
    for (unsigned a = 0; a < src.order(); ++a)
        for (unsigned b = 0; b < src.order(); ++b)
            if (images[src.mul(a, b)] != tgt.mul(images[a], images[b])) return false;
    return true;
}

GroupAction::GroupAction(FiniteGroup gamma_, FiniteGroup target_, std::vector<std::vector<unsigned>> act_)
    : gamma(std::move(gamma_)), target(std::move(target_)), act(std::move(act_)) {
    if (act.size() != gamma.order()) throw input_error("action needs one permutation per gamma element");
    for (const auto& p : act) {
        if (p.size() != target.order()) throw input_error("action permutation has wrong length");
        if (!is_homomorphism(target, target, p)) throw input_error("action value is not an endomorphism");
        std::set<unsigned> seen(p.begin(), p.end());
        if (seen.size() != target.order()) throw input_error("action value is not bijective");
    }
    for (unsigned x = 0; x < target.order(); ++x)
        if (act[gamma.identity()][x] != x) throw input_error("identity must act trivially");
    for (unsigned g = 0; g < gamma.order(); ++g)
        for (unsigned h = 0; h < gamma.order(); ++h)
            for (unsigned x = 0; x < target.order(); ++x)
                if (act[gamma.mul(g, h)][x] != act[g][act[h][x]])
                    throw input_error("action is not a homomorphism from gamma");
}

GroupAction GroupAction::trivial(const FiniteGroup& gamma_, const FiniteGroup& target_) {
    std::vector<unsigned> id(target_.order());
    std::iota(id.begin(), id.end(), 0u);
    return GroupAction(gamma_, target_, std::vector<std::vector<unsigned>>(gamma_.order(), id));
}

bool GroupAction::is_trivial() const {
    for (unsigned g = 0; g < gamma.order(); ++g)
        for (unsigned x = 0; x < target.order(); ++x)
            if (act[g][x] != x) return false;
    return true;
}

GammaGroup::GammaGroup(FiniteGroup g_, FiniteGroup gamma_, GroupAction action_)
    : g(std::move(g_)), gamma(std::move(gamma_)), action(std::move(action_)) {
    if (!(action.target == g) || !(action.gamma == gamma))
        throw input_error("gamma-group action does not match its groups");
}

GammaGroup GammaGroup::with_trivial_action(const FiniteGroup& g_, const FiniteGroup& gamma_) {
    return GammaGroup(g_, gamma_, GroupAction::trivial(gamma_, g_));
}

GammaGroup cyclic_with_power_action(std::size_t m, const FiniteGroup& gamma,
                                    const std::vector<unsigned>& k) {
    FiniteGroup g = make_cyclic(m);
    if (k.size() != gamma.order()) throw input_error("need one exponent per gamma element");
    std::vector<std::vector<unsigned>> act(gamma.order(), std::vector<unsigned>(m));
    for (unsigned c = 0; c < gamma.order(); ++c) {
        if (std::gcd<std::size_t>(k[c], m) != 1) throw input_error("action exponent not coprime to m");
        for (unsigned x = 0; x < m; ++x) act[c][x] = static_cast<unsigned>((static_cast<std::size_t>(x) * k[c]) % m);
    }
    return GammaGroup(g, gamma, GroupAction(gamma, g, std::move(act)));
}

GammaGroup cyclic_with_inversion(std::size_t m) {
    unsigned neg = m > 1 ? static_cast<unsigned>(m - 1) : 1u;
    return cyclic_with_power_action(m, make_cyclic(2), {1u, neg});
}

Subgroup::Subgroup(FiniteGroup parent_, std::vector<unsigned> members_)
    : parent(std::move(parent_)), members(std::move(members_)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!contains(parent.identity())) throw input_error("subgroup must contain the identity");
    for (unsigned a : members) {
        if (!contains(parent.inv(a))) throw input_error("subgroup not closed under inverses");
        for (unsigned b : members)
            if (!contains(parent.mul(a, b))) throw input_error("subgroup not closed under multiplication");
    }
}

bool Subgroup::contains(unsigned x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

bool Subgroup::is_normal() const {
    for (unsigned x = 0; x < parent.order(); ++x)
        for (unsigned h : members)
            if (!contains(parent.conjugate(x, h))) return false;
    return true;
}

Subgroup closure(const FiniteGroup& g, std::vector<unsigned> generators) {
    std::vector<bool> in(g.order(), false);
    std::vector<unsigned> work{g.identity()};
    in[g.identity()] = true;
    for (unsigned x : generators)
        if (!in[x]) {
            in[x] = true;
            work.push_back(x);
        }
    // Saturate under products with generators and inverses.
    for (std::size_t i = 0; i < work.size(); ++i) {
        unsigned x = work[i];
        auto push = [&](unsigned y) {
            if (!in[y]) {
                in[y] = true;
                work.push_back(y);
            }
        };
        push(g.inv(x));
        for (unsigned h : generators) {
            push(g.mul(x, h));
            push(g.mul(h, x));
        }
    }
    std::vector<unsigned> members;
    for (unsigned x = 0; x < g.order(); ++x)
        if (in[x]) members.push_back(x);
    return Subgroup(g, std::move(members));
}

Subgroup normal_closure(const FiniteGroup& g, const std::vector<unsigned>& generators) {
    std::vector<unsigned> gens;
    for (unsigned h : generators)
        for (unsigned x = 0; x < g.order(); ++x) gens.push_back(g.conjugate(x, h));
    return closure(g, gens);
}

Subgroup center(const FiniteGroup& g) {
    std::vector<unsigned> members;
    for (unsigned a = 0; a < g.order(); ++a) {
        bool central = true;
        for (unsigned b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
        if (central) members.push_back(a);
    }
    return Subgroup(g, std::move(members));
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
    std::vector<unsigned> gens;
    for (unsigned a = 0; a < g.order(); ++a)
        for (unsigned b = 0; b < g.order(); ++b)
            gens.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    return closure(g, gens);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    std::vector<unsigned> members;
    for (unsigned x : a.members)
        if (b.contains(x)) members.push_back(x);
    return Subgroup(a.parent, std::move(members));
}

Subgroup gamma_commutant(const GammaGroup& gg) {
    const FiniteGroup& g = gg.g;
    std::vector<unsigned> gens;
    for (unsigned a = 0; a < g.order(); ++a)
        for (unsigned b = 0; b < g.order(); ++b)
            gens.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    for (unsigned c = 0; c < gg.gamma.order(); ++c)
        for (unsigned a = 0; a < g.order(); ++a) gens.push_back(g.mul(gg.act(c, a), g.inv(a)));
    Subgroup s = closure(g, gens);
    if (!s.is_normal()) throw invariant_error("gamma commutant is not normal");
    if (!is_gamma_stable(gg, s)) throw invariant_error("gamma commutant is not gamma-stable");
    return s;
}

Subgroup gamma_subgroup(const GammaGroup& gg) {
    const FiniteGroup& g = gg.g;
    std::vector<unsigned> gens;
    for (unsigned c = 0; c < gg.gamma.order(); ++c)
        for (unsigned a = 0; a < g.order(); ++a) gens.push_back(g.mul(gg.act(c, a), g.inv(a)));
    Subgroup s = normal_closure(g, gens);
    if (!is_gamma_stable(gg, s)) throw invariant_error("gamma subgroup is not gamma-stable");
    return s;
}

Subgroup relative_commutator(const GammaGroup& gg, const Subgroup& h) {
    if (!h.is_normal()) throw input_error("relative commutator requires a normal subgroup");
    const FiniteGroup& g = gg.g;
    std::vector<unsigned> gens;
    for (unsigned x = 0; x < g.order(); ++x)
        for (unsigned y : h.members)
            for (unsigned c = 0; c < gg.gamma.order(); ++c)
                gens.push_back(g.mul(g.mul(x, gg.act(c, y)), g.mul(g.inv(x), g.inv(y))));
    Subgroup s = closure(g, gens);
    if (!s.is_normal()) throw invariant_error("relative commutator is not normal");
    return s;
}

bool is_gamma_perfect(const GammaGroup& gg) { return gamma_commutant(gg).is_whole_group(); }

bool is_gamma_stable(const GammaGroup& gg, const Subgroup& s) {
    for (unsigned c = 0; c < gg.gamma.order(); ++c)
        for (unsigned x : s.members)
            if (!s.contains(gg.act(c, x))) return false;
    return true;
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n) {
    if (!n.is_normal()) throw input_error("quotient requires a normal subgroup");
    std::vector<unsigned> coset_of(g.order(), 0);
    std::vector<unsigned> reps;
    std::vector<bool> assigned(g.order(), false);
    for (unsigned x = 0; x < g.order(); ++x) {
        if (assigned[x]) continue;
        unsigned c = static_cast<unsigned>(reps.size());
        reps.push_back(x);  // smallest element of the coset, by scan order
        for (unsigned h : n.members) {
            unsigned y = g.mul(x, h);
            assigned[y] = true;
            coset_of[y] = c;
        }
    }
    std::size_t m = reps.size();
    if (m * n.order() != g.order()) throw invariant_error("coset count mismatch");
    std::vector<std::vector<unsigned>> t(m, std::vector<unsigned>(m));
    for (unsigned a = 0; a < m; ++a)
        for (unsigned b = 0; b < m; ++b) t[a][b] = coset_of[g.mul(reps[a], reps[b])];
    FiniteGroup q(std::move(t));
    GroupHom proj(g, q, coset_of);
    return {q, std::move(proj), std::move(reps)};
}

SemidirectProduct semidirect_product(const GammaGroup& gg) {
    const FiniteGroup& g = gg.g;
    const FiniteGroup& c = gg.gamma;
    std::size_t m = g.order() * c.order();
    auto idx = [&](unsigned a, unsigned x) { return a * c.order() + x; };
    std::vector<std::vector<unsigned>> t(m, std::vector<unsigned>(m));
    std::vector<std::string> names(m);
    for (unsigned a = 0; a < g.order(); ++a)
        for (unsigned x = 0; x < c.order(); ++x) {
            names[idx(a, x)] = "(" + g.name(a) + "," + c.name(x) + ")";
            for (unsigned b = 0; b < g.order(); ++b)
                for (unsigned y = 0; y < c.order(); ++y)
                    t[idx(a, x)][idx(b, y)] = idx(g.mul(a, gg.act(x, b)), c.mul(x, y));
        }
    FiniteGroup sd(std::move(t), std::move(names));
    std::vector<unsigned> gi(g.order()), ci(c.order()), g_part(m), gamma_part(m);
    for (unsigned a = 0; a < g.order(); ++a) gi[a] = idx(a, c.identity());
    for (unsigned x = 0; x < c.order(); ++x) ci[x] = idx(g.identity(), x);
    for (unsigned a = 0; a < g.order(); ++a)
        for (unsigned x = 0; x < c.order(); ++x) {
            g_part[idx(a, x)] = a;
            gamma_part[idx(a, x)] = x;
        }
    GroupHom inj_g(g, sd, gi), inj_c(c, sd, ci);
    return {std::move(sd), std::move(inj_g), std::move(inj_c), std::move(g_part), std::move(gamma_part)};
}

bool is_gamma_map(const GroupHom& f, const GroupAction& src_action, const GroupAction& tgt_action) {
    for (unsigned c = 0; c < src_action.gamma.order(); ++c)
        for (unsigned x = 0; x < f.source.order(); ++x)
            if (f(src_action(c, x)) != tgt_action(c, f(x))) return false;
    return true;
}

std::vector<unsigned> generating_set(const FiniteGroup& g) {
    std::vector<unsigned> gens;
    Subgroup cur(g, {g.identity()});
    for (unsigned x = 0; x < g.order(); ++x) {
        if (cur.contains(x)) continue;
        gens.push_back(x);
        std::vector<unsigned> all = gens;
        cur = closure(g, all);
        if (cur.is_whole_group()) break;
    }
    return gens;
}

std::optional<std::vector<unsigned>> extend_generator_images(const FiniteGroup& a,
                                                             const FiniteGroup& b,
                                                             const std::vector<unsigned>& gens,
                                                             const std::vector<unsigned>& imgs) {
    constexpr unsigned kUnset = ~0u;
    std::vector<unsigned> out(a.order(), kUnset);
    out[a.identity()] = b.identity();
    std::vector<unsigned> work{a.identity()};
    for (std::size_t i = 0; i < work.size(); ++i) {
        unsigned x = work[i];
        for (std::size_t k = 0; k < gens.size(); ++k) {
            unsigned y = a.mul(x, gens[k]);
            unsigned img = b.mul(out[x], imgs[k]);
            if (out[y] == kUnset) {
                out[y] = img;
                work.push_back(y);
            } else if (out[y] != img) {
                return std::nullopt;
            }
        }
    }
    for (unsigned x = 0; x < a.order(); ++x)
        if (out[x] == kUnset) return std::nullopt;  // gens do not generate
    if (!is_homomorphism(a, b, out)) return std::nullopt;
    return out;
}

FiniteGroup subgroup_as_group(const Subgroup& s) {
    std::vector<unsigned> idx_of(s.parent.order(), ~0u);
    for (std::size_t i = 0; i < s.members.size(); ++i) idx_of[s.members[i]] = static_cast<unsigned>(i);
    std::size_t m = s.members.size();
    std::vector<std::vector<unsigned>> t(m, std::vector<unsigned>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            t[a][b] = idx_of[s.parent.mul(s.members[a], s.members[b])];
    return FiniteGroup(std::move(t));
}

namespace {

bool iso_search(const FiniteGroup& a, const FiniteGroup& b, const std::vector<unsigned>& gens,
                std::vector<unsigned>& imgs, std::size_t k) {
    if (k == gens.size()) {
        auto full = extend_generator_images(a, b, gens, imgs);
        if (!full) return false;
        std::set<unsigned> seen(full->begin(), full->end());
        return seen.size() == a.order();
    }
    unsigned want = a.element_order(gens[k]);
    for (unsigned y = 0; y < b.order(); ++y) {
        if (b.element_order(y) != want) continue;
        imgs[k] = y;
        if (iso_search(a, b, gens, imgs, k + 1)) return true;
    }
    return false;
}

}  // namespace

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return false;
    std::vector<unsigned> gens = generating_set(a);
    std::vector<unsigned> imgs(gens.size());
    return iso_search(a, b, gens, imgs, 0);
}

}  // namespace gammahom
