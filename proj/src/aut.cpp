#include "agt/aut.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "agt/errors.hpp"
#include "agt/kernels.hpp"

namespace agt {

namespace {

using Coloring = std::vector<int>;

// Initial vertex invariant: degree plus the sorted distance profile (n stands
// in for unreachable). Purely structural, so identical across isomorphic
// graphs.
std::vector<std::vector<int>> initial_invariants(const Graph& g) {
    auto dist = all_pairs_distances_serial(g);
    std::vector<std::vector<int>> inv(g.n());
    for (int v = 0; v < g.n(); ++v) {
        auto row = dist[v];
        for (int& d : row)
            if (d < 0) d = g.n();
        std::sort(row.begin(), row.end());
        row.insert(row.begin(), g.degree(v));
        inv[v] = std::move(row);
    }
    return inv;
}

// Canonical color ids from arbitrary per-vertex keys: sort the distinct keys,
// id = rank. Never consults vertex ids, which keeps refinement invariant.
template <class Key>
Coloring canonical_colors(const std::vector<Key>& keys) {
    std::vector<Key> sorted(keys);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Coloring c(keys.size());
    for (size_t v = 0; v < keys.size(); ++v)
        c[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
                                sorted.begin());
    return c;
}

int color_count(const Coloring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// One signature pass: (own color, sorted neighbor colors).
std::vector<std::pair<int, std::vector<int>>> signatures(const Graph& g, const Coloring& c) {
    std::vector<std::pair<int, std::vector<int>>> sig(g.n());
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> nb;
        for (int u : g.neighbors(v)) nb.push_back(c[u]);
        std::sort(nb.begin(), nb.end());
        sig[v] = {c[v], std::move(nb)};
    }
    return sig;
}

Coloring refine(const Graph& g, Coloring c) {
    int colors = color_count(c);
    for (;;) {
        c = canonical_colors(signatures(g, c));
        int now = color_count(c);
        if (now == colors) return c;
        colors = now;
    }
}

Coloring individualize(const Coloring& c, int v) {
    std::vector<std::pair<int, int>> keys(c.size());
    for (size_t u = 0; u < c.size(); ++u) keys[u] = {c[u], u == static_cast<size_t>(v) ? 0 : 1};
    return canonical_colors(keys);
}

std::vector<int> cell_sizes(const Coloring& c) {
    std::vector<int> sz(color_count(c), 0);
    for (int col : c) ++sz[col];
    return sz;
}

bool is_discrete(const Coloring& c) {
    auto sz = cell_sizes(c);
    return std::all_of(sz.begin(), sz.end(), [](int s) { return s == 1; });
}

// vertices listed by color (discrete colorings only)
std::vector<int> labeling(const Coloring& c) {
    std::vector<int> lab(c.size());
    for (size_t v = 0; v < c.size(); ++v) lab[c[v]] = static_cast<int>(v);
    return lab;
}

std::vector<int> first_nonsingleton_cell(const Coloring& c) {
    auto sz = cell_sizes(c);
    int target = -1;
    for (size_t k = 0; k < sz.size(); ++k)
        if (sz[k] > 1) {
            target = static_cast<int>(k);
            break;
        }
    std::vector<int> cell;
    if (target < 0) return cell;
    for (size_t v = 0; v < c.size(); ++v)
        if (c[v] == target) cell.push_back(static_cast<int>(v));
    return cell;
}

bool preserves_adjacency(const Graph& g, const std::vector<int>& p) {
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            if (!g.adjacent(p[u], p[v])) return false;
    return true;
}

struct AutSearch {
    const Graph& g;
    std::vector<Perm> gens;
    PermGroup group;
    std::vector<int> first_leaf;
    bool have_first = false;
    std::vector<std::vector<int>> left_shapes; // refined node shape per depth, leftmost path
    std::vector<int> prefix;                   // individualized vertices on the leftmost path

    explicit AutSearch(const Graph& graph) : g(graph), group(PermGroup::trivial(graph.n())) {}

    void add_candidate(const Perm& p) {
        if (p.is_identity() || group.contains(p)) return;
        gens.push_back(p);
        group = PermGroup(g.n(), gens);
    }

    // Orbits of the known automorphisms that fix the current prefix pointwise;
    // safe to explore one representative per orbit at leftmost nodes.
    std::vector<int> prefix_orbit_root() const {
        std::vector<int> root(g.n());
        for (int v = 0; v < g.n(); ++v) root[v] = v;
        std::function<int(int)> find = [&](int a) {
            while (root[a] != a) a = root[a] = root[root[a]];
            return a;
        };
        for (const auto& h : gens) {
            bool fixes = true;
            for (int p : prefix)
                if (h(p) != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < g.n(); ++v) {
                int a = find(v), b = find(h(v));
                if (a != b) root[std::max(a, b)] = std::min(a, b);
            }
        }
        std::vector<int> out(g.n());
        for (int v = 0; v < g.n(); ++v) out[v] = find(v);
        return out;
    }

    bool node(const Coloring& c, size_t depth, bool leftmost) {
        auto shape = cell_sizes(c);
        if (leftmost) {
            left_shapes.push_back(shape);
        } else if (depth >= left_shapes.size() || shape != left_shapes[depth]) {
            return false;
        }
        if (is_discrete(c)) {
            auto lab = labeling(c);
            if (!have_first) {
                first_leaf = lab;
                have_first = true;
                return false;
            }
            std::vector<int> image(g.n());
            for (int i = 0; i < g.n(); ++i) image[first_leaf[i]] = lab[i];
            if (!preserves_adjacency(g, image)) return false;
            add_candidate(Perm(image));
            return true;
        }
        auto cell = first_nonsingleton_cell(c);
        if (leftmost) {
            std::vector<int> explored;
            bool first_child = true;
            for (int v : cell) {
                if (!first_child) {
                    auto root = prefix_orbit_root();
                    bool skip = false;
                    for (int u : explored)
                        if (root[u] == root[v]) {
                            skip = true;
                            break;
                        }
                    if (skip) continue;
                }
                explored.push_back(v);
                prefix.push_back(v);
                node(refine(g, individualize(c, v)), depth + 1, first_child);
                prefix.pop_back();
                first_child = false;
            }
            return false;
        }
        for (int v : cell)
            if (node(refine(g, individualize(c, v)), depth + 1, false)) return true;
        return false;
    }
};

} // namespace

PermGroup automorphism_group(const Graph& g) {
    if (g.n() == 0) return PermGroup::trivial(0);
    AutSearch search(g);
    search.node(refine(g, canonical_colors(initial_invariants(g))), 0, true);
    return PermGroup(g.n(), search.gens);
}

namespace {

// Joint canonicalization for the isomorphism search: both graphs share one
// color table, and every color class must have equal size on the two sides.
template <class Key>
bool joint_colors(const std::vector<Key>& ka, const std::vector<Key>& kb, Coloring& ca,
                  Coloring& cb) {
    std::vector<Key> sorted(ka);
    sorted.insert(sorted.end(), kb.begin(), kb.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto rank = [&](const Key& k) {
        return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin());
    };
    ca.resize(ka.size());
    cb.resize(kb.size());
    std::vector<int> cnt_a(sorted.size(), 0), cnt_b(sorted.size(), 0);
    for (size_t v = 0; v < ka.size(); ++v) ++cnt_a[ca[v] = rank(ka[v])];
    for (size_t v = 0; v < kb.size(); ++v) ++cnt_b[cb[v] = rank(kb[v])];
    return cnt_a == cnt_b;
}

bool refine_pair(const Graph& g, const Graph& h, Coloring& cg, Coloring& ch) {
    int colors = -1;
    for (;;) {
        if (!joint_colors(signatures(g, cg), signatures(h, ch), cg, ch)) return false;
        int now = color_count(cg);
        if (now == colors) return true;
        colors = now;
    }
}

std::optional<std::vector<int>> iso_node(const Graph& g, const Graph& h, const Coloring& cg,
                                         const Coloring& ch) {
    if (is_discrete(cg)) {
        auto la = labeling(cg), lb = labeling(ch);
        std::vector<int> image(g.n());
        for (int i = 0; i < g.n(); ++i) image[la[i]] = lb[i];
        // edge counts match, so g-edges landing on h-edges makes image an isomorphism
        for (int u = 0; u < g.n(); ++u)
            for (int v : g.neighbors(u))
                if (!h.adjacent(image[u], image[v])) return std::nullopt;
        return image;
    }
    auto cell = first_nonsingleton_cell(cg);
    int v = cell.front();
    int target = cg[v];
    for (int w = 0; w < h.n(); ++w) {
        if (ch[w] != target) continue;
        Coloring cg2 = individualize(cg, v), ch2 = individualize(ch, w);
        if (!refine_pair(g, h, cg2, ch2)) continue;
        if (auto found = iso_node(g, h, cg2, ch2)) return found;
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
    if (g.n() == 0) return std::vector<int>{};
    Coloring cg, ch;
    if (!joint_colors(initial_invariants(g), initial_invariants(h), cg, ch)) return std::nullopt;
    if (!refine_pair(g, h, cg, ch)) return std::nullopt;
    // isomorphism preserves edge counts already checked; the search does the rest
    return iso_node(g, h, cg, ch);
}

// ---- s-arc machinery ----

long long count_s_arcs(const Graph& g, int s) {
    if (s < 0) throw std::invalid_argument("negative s");
    if (s == 0) return g.n();
    auto es = g.edges();
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : es) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    std::map<std::pair<int, int>, int> id;
    for (size_t i = 0; i < arcs.size(); ++i) id[arcs[i]] = static_cast<int>(i);
    std::vector<long long> f(arcs.size(), 1);
    for (int step = 1; step < s; ++step) {
        std::vector<long long> nf(arcs.size(), 0);
        for (size_t i = 0; i < arcs.size(); ++i) {
            if (f[i] == 0) continue;
            auto [u, v] = arcs[i];
            for (int w : g.neighbors(v))
                if (w != u) nf[id[{v, w}]] += f[i];
        }
        f = std::move(nf);
    }
    long long total = 0;
    for (long long x : f) total += x;
    return total;
}

namespace {

constexpr long long kArcEnumBound = 200000;

void extend_arcs(const Graph& g, std::vector<int>& walk, int s,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(walk.size()) == s + 1) {
        if (static_cast<long long>(out.size()) >= kArcEnumBound)
            throw bound_error("too many s-arcs to enumerate");
        out.push_back(walk);
        return;
    }
    int v = walk.back();
    int prev = walk.size() >= 2 ? walk[walk.size() - 2] : -1;
    for (int w : g.neighbors(v))
        if (w != prev) {
            walk.push_back(w);
            extend_arcs(g, walk, s, out);
            walk.pop_back();
        }
}

std::vector<std::vector<int>> all_s_arcs(const Graph& g, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> walk;
    for (int v = 0; v < g.n(); ++v) {
        walk.assign(1, v);
        extend_arcs(g, walk, s, out);
    }
    return out;
}

} // namespace

bool is_s_arc_transitive(const Graph& g, int s) {
    long long total = count_s_arcs(g, s);
    if (total == 0) return false;
    if (total > kArcEnumBound) throw bound_error("too many s-arcs for the orbit test");
    auto gens = automorphism_group(g).generators();
    // close the lexicographically least s-arc under the generators
    auto arcs = all_s_arcs(g, s);
    auto seed = *std::min_element(arcs.begin(), arcs.end());
    std::set<std::vector<int>> seen{seed};
    std::vector<std::vector<int>> queue{seed};
    while (!queue.empty()) {
        auto a = std::move(queue.back());
        queue.pop_back();
        for (const auto& p : gens) {
            std::vector<int> b(a.size());
            for (size_t i = 0; i < a.size(); ++i) b[i] = p(a[i]);
            if (seen.insert(b).second) queue.push_back(std::move(b));
        }
    }
    return static_cast<long long>(seen.size()) == total;
}

int max_s_arc_transitivity(const Graph& g) {
    if (!is_s_arc_transitive(g, 1)) return 0;
    int cap = girth(g).value_or(g.n());
    int s = 1;
    while (s < cap && is_s_arc_transitive(g, s + 1)) ++s;
    return s;
}

bool is_s_arc_regular(const Graph& g, int s) {
    if (!is_s_arc_transitive(g, s)) return false;
    return automorphism_group(g).order() == count_s_arcs(g, s);
}

bool is_vertex_transitive(const Graph& g) {
    if (g.n() == 0) return true;
    return automorphism_group(g).is_transitive();
}

namespace {

int pair_orbit_count(const std::vector<Perm>& gens, const std::vector<std::pair<int, int>>& seeds,
                     int n) {
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    int orbits = 0;
    for (auto seed : seeds) {
        if (seen[seed.first][seed.second]) continue;
        ++orbits;
        std::vector<std::pair<int, int>> queue{seed};
        seen[seed.first][seed.second] = 1;
        while (!queue.empty()) {
            auto [a, b] = queue.back();
            queue.pop_back();
            for (const auto& p : gens) {
                int u = p(a), v = p(b);
                if (!seen[u][v]) {
                    seen[u][v] = 1;
                    queue.emplace_back(u, v);
                }
            }
        }
    }
    return orbits;
}

int edge_orbit_count(const Graph& g, const std::vector<Perm>& gens) {
    // unordered pairs: close both orientations, count each edge class once
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : g.edges()) arcs.emplace_back(u, v);
    std::set<std::pair<int, int>> unseen(arcs.begin(), arcs.end());
    int orbits = 0;
    while (!unseen.empty()) {
        ++orbits;
        auto seed = *unseen.begin();
        std::vector<std::pair<int, int>> queue{seed};
        std::set<std::pair<int, int>> visited{seed};
        while (!queue.empty()) {
            auto [a, b] = queue.back();
            queue.pop_back();
            for (const auto& p : gens) {
                int u = p(a), v = p(b);
                if (u > v) std::swap(u, v);
                if (visited.insert({u, v}).second) queue.emplace_back(u, v);
            }
        }
        for (const auto& e : visited) unseen.erase(e);
    }
    return orbits;
}

} // namespace

bool is_edge_transitive(const Graph& g) {
    if (g.edge_count() == 0) return true;
    return edge_orbit_count(g, automorphism_group(g).generators()) == 1;
}

bool is_arc_transitive(const Graph& g) {
    if (g.edge_count() == 0) return true;
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return pair_orbit_count(automorphism_group(g).generators(), arcs, g.n()) == 1;
}

bool is_distance_transitive(const Graph& g) {
    if (!is_connected(g) || g.n() == 0) return false;
    auto aut = automorphism_group(g);
    if (!aut.is_transitive()) return false;
    return aut.rank() == diameter(g).value() + 1;
}

bool is_semisymmetric(const Graph& g) {
    if (!g.regular_degree()) return false;
    auto aut = automorphism_group(g);
    if (aut.is_transitive()) return false;
    return edge_orbit_count(g, aut.generators()) == 1;
}

SymmetryCertificate transitivity(const Graph& g) {
    SymmetryCertificate cert;
    auto aut = automorphism_group(g);
    cert.aut_order = aut.order();
    cert.generators = aut.generators();
    cert.vertex_orbits = static_cast<int>(aut.orbits().size());
    cert.vertex_transitive = cert.vertex_orbits <= 1;
    auto gens = aut.generators();
    cert.edge_orbits = edge_orbit_count(g, gens);
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    cert.arc_orbits = pair_orbit_count(gens, arcs, g.n());
    cert.edge_transitive = cert.edge_orbits <= 1;
    cert.arc_transitive = g.edge_count() > 0 && cert.arc_orbits == 1;
    if (cert.arc_transitive) {
        cert.max_s_arc_transitive = max_s_arc_transitivity(g);
        long long cnt = count_s_arcs(g, cert.max_s_arc_transitive);
        if (cert.aut_order == cnt) cert.s_arc_regular = cert.max_s_arc_transitive;
    }
    if (is_connected(g) && cert.vertex_transitive && g.n() > 0)
        cert.distance_transitive = aut.rank() == diameter(g).value() + 1;
    cert.semisymmetric =
        g.regular_degree().has_value() && cert.edge_transitive && !cert.vertex_transitive;
    return cert;
}

Digraph arc_digraph(const Graph& g, int s) {
    if (s < 0) throw std::invalid_argument("negative s");
    Digraph d;
    if (s == 0) {
        d.n = g.n();
        d.out.resize(g.n());
        for (auto [u, v] : g.edges()) {
            d.out[u].push_back(v);
            d.out[v].push_back(u);
        }
        return d;
    }
    auto arcs = all_s_arcs(g, s);
    std::sort(arcs.begin(), arcs.end());
    std::map<std::vector<int>, int> id;
    for (size_t i = 0; i < arcs.size(); ++i) id[arcs[i]] = static_cast<int>(i);
    d.n = static_cast<int>(arcs.size());
    d.out.resize(d.n);
    for (size_t i = 0; i < arcs.size(); ++i) {
        const auto& a = arcs[i];
        std::vector<int> b(a.begin() + 1, a.end());
        b.push_back(-1);
        for (int w : g.neighbors(a[s]))
            if (w != a[s - 1]) {
                b.back() = w;
                auto it = id.find(b);
                if (it != id.end()) d.out[i].push_back(it->second);
            }
    }
    return d;
}

bool is_strongly_connected(const Digraph& d) {
    if (d.n == 0) return true;
    auto reach = [&](bool backward) {
        std::vector<std::vector<int>> adj(d.n);
        for (int u = 0; u < d.n; ++u)
            for (int v : d.out[u])
                (backward ? adj[v] : adj[u]).push_back(backward ? u : v);
        std::vector<char> seen(d.n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++cnt;
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        return cnt == d.n;
    };
    return reach(false) && reach(true);
}

} // namespace agt
