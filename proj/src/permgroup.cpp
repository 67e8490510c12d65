#include "agt/permgroup.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "agt/errors.hpp"

namespace agt {

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : PermGroup(degree, std::move(generators), {}) {}

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::vector<int> base_hint)
    : degree_(degree), hint_(std::move(base_hint)) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::set<Perm> seen;
    for (auto& g : generators) {
        if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
        if (g.is_identity()) continue;
        if (seen.insert(g).second) gens_.push_back(std::move(g));
    }
    for (int x : hint_)
        if (x < 0 || x >= degree) throw std::invalid_argument("base point out of range");
    build();
}

// Longest cycle of g picks the base point (largest initial fundamental orbit);
// least point breaks ties.
void PermGroup::extend_base_for(const Perm& g) {
    int best = -1, best_len = 0;
    std::vector<char> done(degree_, 0);
    for (int i = 0; i < degree_; ++i) {
        if (done[i] || g(i) == i) continue;
        int len = 0;
        for (int j = i; !done[j]; j = g(j)) {
            done[j] = 1;
            ++len;
        }
        if (len > best_len) {
            best_len = len;
            best = i;
        }
    }
    if (best < 0) throw std::logic_error("extend_base_for identity");
    base_.push_back(best);
    levels_.emplace_back();
    levels_.back().base_point = best;
}

std::vector<Perm> PermGroup::level_gens(int i) const {
    std::vector<Perm> out;
    for (size_t k = 0; k < strong_.size(); ++k)
        if (strong_tag_[k] >= i) out.push_back(strong_[k]);
    return out;
}

void PermGroup::recompute_level(int i) {
    Level& lv = levels_[i];
    auto gens = level_gens(i);
    lv.orbit.assign(1, lv.base_point);
    lv.where.assign(degree_, -1);
    lv.where[lv.base_point] = 0;
    lv.transversal.assign(1, Perm::identity(degree_));
    for (size_t idx = 0; idx < lv.orbit.size(); ++idx) {
        int gamma = lv.orbit[idx];
        for (const auto& s : gens) {
            int delta = s(gamma);
            if (lv.where[delta] < 0) {
                lv.where[delta] = static_cast<int>(lv.orbit.size());
                lv.orbit.push_back(delta);
                lv.transversal.push_back(lv.transversal[idx] * s);
            }
        }
    }
}

std::pair<Perm, int> PermGroup::sift_from(Perm p, int start) const {
    for (int i = start; i < static_cast<int>(levels_.size()); ++i) {
        const Level& lv = levels_[i];
        int gamma = p(lv.base_point);
        if (lv.where[gamma] < 0) return {std::move(p), i};
        p = p * lv.transversal[lv.where[gamma]].inverse();
    }
    return {std::move(p), static_cast<int>(levels_.size())};
}

void PermGroup::insert_strong(const Perm& g, int tag) {
    if (tag == static_cast<int>(levels_.size())) extend_base_for(g);
    strong_.push_back(g);
    strong_tag_.push_back(tag);
}

void PermGroup::build() {
    for (int x : hint_) {
        base_.push_back(x);
        levels_.emplace_back();
        levels_.back().base_point = x;
    }
    if (gens_.empty()) {
        for (int i = 0; i < static_cast<int>(levels_.size()); ++i) recompute_level(i);
        return;
    }

    // Greedy first base point: least vertex of a largest orbit of the whole group.
    if (base_.empty()) {
        std::vector<int> comp(degree_, -1);
        std::vector<int> size;
        for (int s = 0; s < degree_; ++s) {
            if (comp[s] >= 0) continue;
            int id = static_cast<int>(size.size());
            std::vector<int> stack{s};
            comp[s] = id;
            int cnt = 0;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++cnt;
                for (const auto& g : gens_) {
                    if (comp[g(v)] < 0) {
                        comp[g(v)] = id;
                        stack.push_back(g(v));
                    }
                }
            }
            size.push_back(cnt);
        }
        int best = 0;
        for (int s = 0; s < degree_; ++s)
            if (size[comp[s]] > size[comp[best]]) best = s;
        base_.push_back(best);
        levels_.emplace_back();
        levels_.back().base_point = best;
    }

    auto fixed_prefix = [&](const Perm& g) {
        int l = 0;
        while (l < static_cast<int>(base_.size()) && g(base_[l]) == base_[l]) ++l;
        return l;
    };
    for (const auto& g : gens_) insert_strong(g, fixed_prefix(g));
    for (int i = 0; i < static_cast<int>(levels_.size()); ++i) recompute_level(i);

    // Randomized sifting warm-up: residues of random generator words seed the
    // deeper levels before the deterministic sweep certifies everything.
    std::mt19937 rng(0x5eed);
    for (int t = 0; t < 32; ++t) {
        Perm w = gens_[rng() % gens_.size()];
        int len = 1 + static_cast<int>(rng() % 5);
        for (int j = 0; j < len; ++j) w = w * gens_[rng() % gens_.size()];
        auto [res, lev] = sift_from(std::move(w), 0);
        if (!res.is_identity()) {
            insert_strong(res, lev);
            for (int i = 0; i <= std::min(lev, static_cast<int>(levels_.size()) - 1); ++i)
                recompute_level(i);
        }
    }

    // Deterministic Schreier-Sims sweep, deepest level first: every Schreier
    // generator of a verified level must sift to the identity below it.
    int i = static_cast<int>(levels_.size()) - 1;
    while (i >= 0) {
        recompute_level(i);
        auto gens = level_gens(i);
        bool clean = true;
        const Level& lv = levels_[i];
        for (size_t idx = 0; idx < lv.orbit.size() && clean; ++idx) {
            for (const auto& s : gens) {
                int delta = s(lv.orbit[idx]);
                Perm schreier = lv.transversal[idx] * s * lv.transversal[lv.where[delta]].inverse();
                auto [res, lev] = sift_from(std::move(schreier), i + 1);
                if (!res.is_identity()) {
                    insert_strong(res, lev);
                    i = lev;
                    clean = false;
                    break;
                }
            }
        }
        if (clean) --i;
    }
}

BigInt PermGroup::order() const {
    BigInt o = 1;
    for (const auto& lv : levels_) o *= static_cast<long long>(lv.orbit.size());
    return o;
}

bool PermGroup::contains(const Perm& p) const {
    if (p.degree() != degree_) throw std::invalid_argument("degree mismatch");
    auto [res, lev] = sift_from(p, 0);
    (void)lev;
    return res.is_identity();
}

std::vector<int> PermGroup::orbit(int x) const {
    if (x < 0 || x >= degree_) throw std::invalid_argument("point out of range");
    std::vector<int> out{x};
    std::vector<char> seen(degree_, 0);
    seen[x] = 1;
    for (size_t i = 0; i < out.size(); ++i)
        for (const auto& g : gens_) {
            int y = g(out[i]);
            if (!seen[y]) {
                seen[y] = 1;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(degree_, 0);
    for (int x = 0; x < degree_; ++x) {
        if (seen[x]) continue;
        auto o = orbit(x);
        for (int v : o) seen[v] = 1;
        out.push_back(std::move(o));
    }
    return out;
}

PermGroup PermGroup::stabilizer(int x) const {
    if (x < 0 || x >= degree_) throw std::invalid_argument("point out of range");
    PermGroup chain(degree_, gens_, {x});
    std::vector<Perm> sub;
    for (size_t k = 0; k < chain.strong_.size(); ++k)
        if (chain.strong_tag_[k] >= 1) sub.push_back(chain.strong_[k]);
    return PermGroup(degree_, std::move(sub));
}

bool PermGroup::is_transitive() const {
    if (degree_ == 0) return true;
    return static_cast<int>(orbit(0).size()) == degree_;
}

bool PermGroup::is_semiregular() const {
    BigInt o = order();
    for (const auto& orb : orbits())
        if (BigInt(static_cast<long long>(orb.size())) != o) return false;
    return true;
}

bool PermGroup::is_regular_action() const {
    return is_transitive() && order() == degree_;
}

std::optional<std::vector<std::vector<int>>> PermGroup::blocks() const {
    if (!is_transitive()) throw std::invalid_argument("blocks need a transitive group");
    if (degree_ <= 2) return std::nullopt;
    for (int x = 1; x < degree_; ++x) {
        // minimal G-congruence identifying 0 and x
        std::vector<int> parent(degree_);
        for (int i = 0; i < degree_; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        std::vector<std::pair<int, int>> queue;
        auto merge = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) {
                parent[std::max(a, b)] = std::min(a, b);
                queue.emplace_back(a, b);
            }
        };
        merge(0, x);
        while (!queue.empty()) {
            auto [a, b] = queue.back();
            queue.pop_back();
            for (const auto& g : gens_) merge(g(a), g(b));
        }
        std::map<int, std::vector<int>> classes;
        for (int v = 0; v < degree_; ++v) classes[find(v)].push_back(v);
        if (classes.size() > 1) {
            std::vector<std::vector<int>> sys;
            for (auto& [root, cls] : classes) sys.push_back(std::move(cls));
            return sys;
        }
    }
    return std::nullopt;
}

bool PermGroup::is_primitive() const {
    return is_transitive() && !blocks().has_value();
}

std::vector<std::vector<std::pair<int, int>>> PermGroup::orbitals() const {
    if (!is_transitive()) throw std::invalid_argument("orbitals need a transitive group");
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::vector<char>> seen(degree_, std::vector<char>(degree_, 0));
    for (int a = 0; a < degree_; ++a)
        for (int b = 0; b < degree_; ++b) {
            if (seen[a][b]) continue;
            std::vector<std::pair<int, int>> orb{{a, b}};
            seen[a][b] = 1;
            for (size_t i = 0; i < orb.size(); ++i)
                for (const auto& g : gens_) {
                    int u = g(orb[i].first), v = g(orb[i].second);
                    if (!seen[u][v]) {
                        seen[u][v] = 1;
                        orb.emplace_back(u, v);
                    }
                }
            std::sort(orb.begin(), orb.end());
            out.push_back(std::move(orb));
        }
    return out;
}

int PermGroup::rank() const {
    return static_cast<int>(orbitals().size());
}

bool PermGroup::is_generously_transitive() const {
    for (const auto& orb : orbitals()) {
        auto [a, b] = orb.front();
        if (!std::binary_search(orb.begin(), orb.end(), std::make_pair(b, a))) return false;
    }
    return true;
}

std::vector<Perm> PermGroup::elements(long long bound) const {
    if (order() > bound) throw bound_error("group too large to enumerate");
    std::vector<Perm> elems{Perm::identity(degree_)};
    for (int i = static_cast<int>(levels_.size()) - 1; i >= 0; --i) {
        std::vector<Perm> next;
        next.reserve(elems.size() * levels_[i].orbit.size());
        for (const auto& u : levels_[i].transversal)
            for (const auto& h : elems) next.push_back(h * u);
        elems = std::move(next);
    }
    return elems;
}

long long PermGroup::burnside_orbit_count(const std::function<long long(const Perm&)>& fixed_count,
                                          long long bound) const {
    BigInt total = 0;
    auto elems = elements(bound);
    for (const auto& g : elems) total += fixed_count(g);
    BigInt o = order();
    if (total % o != 0) throw std::logic_error("Burnside sum not divisible by group order");
    return static_cast<long long>(total / o);
}

} // namespace agt
