#include "agt/homcore.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "agt/errors.hpp"
#include "agt/families.hpp"

namespace agt {

namespace {

void poll(const std::atomic<bool>* cancel) {
    if (cancel && cancel->load(std::memory_order_relaxed)) throw search_cancelled();
}

std::vector<uint64_t> adjacency_masks(const Graph& g) {
    std::vector<uint64_t> adj(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.neighbors(v)) adj[v] |= uint64_t{1} << u;
    return adj;
}

// Backtracking homomorphism search with forward checking. Vertices of g are
// assigned in id order trying target vertices ascending, so the first solution
// is the lexicographically least. Target must have at most 64 vertices.
struct HomEngine {
    const Graph& g;
    std::vector<uint64_t> adj_h;
    uint64_t full;
    const std::atomic<bool>* cancel;
    std::vector<int> map;

    HomEngine(const Graph& g_, const Graph& h, const std::atomic<bool>* cancel_)
        : g(g_), adj_h(adjacency_masks(h)), cancel(cancel_), map(g_.n(), -1) {
        full = h.n() == 64 ? ~uint64_t{0} : (uint64_t{1} << h.n()) - 1;
    }

    bool assign(int v, std::vector<uint64_t> masks) {
        poll(cancel);
        if (v == g.n()) return true;
        uint64_t options = masks[v];
        while (options) {
            int a = std::countr_zero(options);
            options &= options - 1;
            auto next = masks;
            bool dead = false;
            for (int u : g.neighbors(v)) {
                if (u <= v) continue;
                next[u] &= adj_h[a];
                if (next[u] == 0) {
                    dead = true;
                    break;
                }
            }
            if (dead) continue;
            map[v] = a;
            if (assign(v + 1, std::move(next))) return true;
        }
        map[v] = -1;
        return false;
    }

    std::optional<std::vector<int>> run() {
        if (g.n() == 0) return std::vector<int>{};
        if (adj_h.empty()) return std::nullopt;
        // any vertex with an edge cannot map onto an isolated target vertex
        // when its image's neighborhood empties; forward checking handles it
        if (!assign(0, std::vector<uint64_t>(g.n(), full))) return std::nullopt;
        return map;
    }
};

std::optional<std::vector<int>> hom_search(const Graph& g, const Graph& h,
                                           const std::atomic<bool>* cancel) {
    if (h.n() > 64) throw bound_error("homomorphism target capped at 64 vertices");
    return HomEngine(g, h, cancel).run();
}

} // namespace

std::optional<HomWitness> find_homomorphism(const Graph& g, const Graph& h,
                                            const std::atomic<bool>* cancel) {
    if (g.n() > 60) throw bound_error("homomorphism source capped at 60 vertices");
    if (h.n() > 12) throw bound_error("homomorphism target capped at 12 vertices");
    auto found = hom_search(g, h, cancel);
    if (!found) return std::nullopt;
    return HomWitness{std::move(*found)};
}

namespace {

// first vertex whose neighborhood is contained in another vertex's, if any
std::optional<int> dominated_vertex(const Graph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v) {
            if (u == v) continue;
            if ((g.row(u) & ~g.row(v)).none()) return u;
        }
    return std::nullopt;
}

} // namespace

Graph core(const Graph& g, const std::atomic<bool>* cancel) {
    if (g.n() > 40) throw bound_error("core computation capped at 40 vertices");
    Graph cur = g;
    for (;;) {
        poll(cancel);
        if (auto u = dominated_vertex(cur)) {
            cur = delete_vertex(cur, *u); // folding u onto its dominator retracts
            continue;
        }
        bool shrunk = false;
        for (int v = 0; v < cur.n() && !shrunk; ++v) {
            Graph smaller = delete_vertex(cur, v);
            if (hom_search(cur, smaller, cancel)) {
                cur = std::move(smaller);
                shrunk = true;
            }
        }
        if (!shrunk) return cur;
    }
}

bool is_core(const Graph& g, const std::atomic<bool>* cancel) {
    if (g.n() > 40) throw bound_error("core computation capped at 40 vertices");
    if (g.n() <= 1) return true;
    if (dominated_vertex(g)) return false;
    for (int v = 0; v < g.n(); ++v)
        if (hom_search(g, delete_vertex(g, v), cancel)) return false;
    return true;
}

namespace {

struct IndependenceSearch {
    std::vector<uint64_t> adj;
    int best = 0;

    void expand(uint64_t cand, int size) {
        if (size + std::popcount(cand) <= best) return;
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        // branch on the candidate vertex with most candidate neighbors
        uint64_t scan = cand;
        int pivot = -1, pdeg = -1;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int deg = std::popcount(adj[v] & cand);
            if (deg > pdeg) {
                pdeg = deg;
                pivot = v;
            }
        }
        uint64_t bit = uint64_t{1} << pivot;
        expand((cand & ~adj[pivot]) & ~bit, size + 1); // take the pivot
        expand(cand & ~bit, size);                     // or skip it
    }
};

} // namespace

int independence_number(const Graph& g) {
    if (g.n() > 60) throw bound_error("independence number capped at 60 vertices");
    if (g.n() == 0) return 0;
    IndependenceSearch search;
    search.adj = adjacency_masks(g);
    uint64_t full = g.n() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.n()) - 1;
    search.expand(full, 0);
    return search.best;
}

std::vector<std::vector<int>> max_independent_sets(const Graph& g) {
    int alpha = independence_number(g);
    auto adj = adjacency_masks(g);
    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    // include/exclude on the least candidate vertex; each set visited once
    auto rec = [&](auto&& self, uint64_t cand) -> void {
        if (static_cast<int>(chosen.size()) == alpha) {
            out.push_back(chosen);
            return;
        }
        if (static_cast<int>(chosen.size()) + std::popcount(cand) < alpha) return;
        int v = std::countr_zero(cand);
        uint64_t bit = uint64_t{1} << v;
        chosen.push_back(v);
        self(self, (cand & ~adj[v]) & ~bit);
        chosen.pop_back();
        self(self, cand & ~bit);
    };
    uint64_t full = g.n() == 0 ? 0 : (g.n() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.n()) - 1);
    if (alpha > 0) rec(rec, full);
    return out;
}

int clique_number(const Graph& g) { return independence_number(complement(g)); }

int chromatic_number(const Graph& g) {
    if (g.n() > 60) throw bound_error("chromatic number capped at 60 vertices");
    if (g.n() == 0) return 0;
    if (g.edge_count() == 0) return 1;
    for (int c = 2; c <= g.n(); ++c)
        if (hom_search(g, complete_graph(c), nullptr)) return c;
    return g.n();
}

namespace {

struct CycleSearch {
    const Graph& g;
    std::vector<uint64_t> adj;
    int n;
    const std::atomic<bool>* cancel;
    std::vector<int> path;
    uint64_t visited = 0;

    CycleSearch(const Graph& g_, const std::atomic<bool>* c)
        : g(g_), adj(adjacency_masks(g_)), n(g_.n()), cancel(c) {}

    // every unvisited vertex still needs two usable neighbors, and the
    // unvisited region plus the two path ends must hang together
    bool viable(int head, int tail) const {
        uint64_t region = ~visited & ((n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1));
        uint64_t usable = region | (uint64_t{1} << head) | (uint64_t{1} << tail);
        uint64_t rest = region;
        while (rest) {
            int r = std::countr_zero(rest);
            rest &= rest - 1;
            if (std::popcount(adj[r] & usable) < 2) return false;
        }
        // flood from head over region
        uint64_t reach = adj[head] & region;
        for (;;) {
            uint64_t grow = reach;
            uint64_t scan = reach;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                grow |= adj[v] & region;
            }
            if (grow == reach) break;
            reach = grow;
        }
        return reach == region;
    }

    bool extend_cycle() {
        poll(cancel);
        int v = path.back();
        if (static_cast<int>(path.size()) == n) return g.adjacent(v, path.front());
        if (!viable(v, path.front())) return false;
        uint64_t options = adj[v] & ~visited;
        while (options) {
            int w = std::countr_zero(options);
            options &= options - 1;
            path.push_back(w);
            visited |= uint64_t{1} << w;
            if (extend_cycle()) return true;
            visited &= ~(uint64_t{1} << w);
            path.pop_back();
        }
        return false;
    }

    bool extend_path() {
        poll(cancel);
        int v = path.back();
        if (static_cast<int>(path.size()) == n) return true;
        uint64_t region = ~visited & ((n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1));
        uint64_t usable = region | (uint64_t{1} << v);
        int tight = 0;
        uint64_t rest = region;
        while (rest) {
            int r = std::countr_zero(rest);
            rest &= rest - 1;
            int deg = std::popcount(adj[r] & usable);
            if (deg == 0) return false;
            if (deg == 1) ++tight;
        }
        if (tight > 1) return false;
        uint64_t reach = adj[v] & region;
        for (;;) {
            uint64_t grow = reach;
            uint64_t scan = reach;
            while (scan) {
                int w = std::countr_zero(scan);
                scan &= scan - 1;
                grow |= adj[w] & region;
            }
            if (grow == reach) break;
            reach = grow;
        }
        if (reach != region) return false;
        uint64_t options = adj[v] & ~visited;
        while (options) {
            int w = std::countr_zero(options);
            options &= options - 1;
            path.push_back(w);
            visited |= uint64_t{1} << w;
            if (extend_path()) return true;
            visited &= ~(uint64_t{1} << w);
            path.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g,
                                                  const std::atomic<bool>* cancel) {
    if (g.n() > 64) throw bound_error("Hamiltonicity search capped at 64 vertices");
    if (g.n() < 3) return std::nullopt;
    CycleSearch search(g, cancel);
    search.path.push_back(0);
    search.visited = 1;
    if (search.extend_cycle()) return search.path;
    return std::nullopt;
}

std::optional<std::vector<int>> hamiltonian_path(const Graph& g,
                                                 const std::atomic<bool>* cancel) {
    if (g.n() > 64) throw bound_error("Hamiltonicity search capped at 64 vertices");
    if (g.n() == 0) return std::nullopt;
    if (g.n() == 1) return std::vector<int>{0};
    for (int start = 0; start < g.n(); ++start) {
        CycleSearch search(g, cancel);
        search.path.push_back(start);
        search.visited = uint64_t{1} << start;
        if (search.extend_path()) return search.path;
    }
    return std::nullopt;
}

namespace {

struct LongCycleSearch {
    const Graph& g;
    std::vector<uint64_t> adj;
    int target;
    const std::atomic<bool>* cancel;
    std::vector<int> path;
    uint64_t visited = 0;
    int root = 0;

    bool extend() {
        poll(cancel);
        int v = path.back();
        if (static_cast<int>(path.size()) >= target && g.adjacent(v, root)) return true;
        uint64_t options = adj[v] & ~visited;
        while (options) {
            int w = std::countr_zero(options);
            options &= options - 1;
            if (w < root) continue; // the root is the least vertex of the cycle
            path.push_back(w);
            visited |= uint64_t{1} << w;
            if (extend()) return true;
            visited &= ~(uint64_t{1} << w);
            path.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> long_cycle_at_least(const Graph& g, int target,
                                                    const std::atomic<bool>* cancel) {
    if (g.n() > 40) throw bound_error("cycle search capped at 40 vertices");
    target = std::max(target, 3);
    if (g.n() < target) return std::nullopt;
    for (int root = 0; root < g.n(); ++root) {
        LongCycleSearch search{g, adjacency_masks(g), target, cancel, {}, 0, root};
        search.path.push_back(root);
        search.visited = uint64_t{1} << root;
        if (search.extend()) return search.path;
    }
    return std::nullopt;
}

std::vector<Edge> max_matching(const Graph& g) {
    if (g.n() == 0) return {};
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(g.n());
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(g.n());
    boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
    std::vector<Edge> out;
    auto null = boost::graph_traits<BoostGraph>::null_vertex();
    for (int v = 0; v < g.n(); ++v)
        if (mate[v] != null && static_cast<int>(mate[v]) > v)
            out.push_back({v, static_cast<int>(mate[v])});
    return out;
}

namespace {

struct Dinic {
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> adj;
    std::vector<int> level, iter;

    explicit Dinic(int n) : adj(n), level(n), iter(n) {}

    void add(int u, int v, int cap, int back = 0) {
        adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
        adj[v].push_back({u, back, static_cast<int>(adj[u].size()) - 1});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::vector<int> queue{s};
        level[s] = 0;
        for (size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            for (const Arc& a : adj[v])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    queue.push_back(a.to);
                }
        }
        return level[t] >= 0;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(adj[v].size()); ++i) {
            Arc& a = adj[v][i];
            if (a.cap <= 0 || level[a.to] != level[v] + 1) continue;
            int d = dfs(a.to, t, std::min(f, a.cap));
            if (d > 0) {
                a.cap -= d;
                adj[a.to][a.rev].cap += d;
                return d;
            }
        }
        return 0;
    }

    int maxflow(int s, int t, int cutoff) {
        int flow = 0;
        while (flow < cutoff && bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            int f;
            while (flow < cutoff && (f = dfs(s, t, cutoff - flow)) > 0) flow += f;
        }
        return flow;
    }
};

} // namespace

int edge_connectivity(const Graph& g) {
    if (g.n() == 0 || !is_connected(g)) throw std::invalid_argument("need a connected graph");
    if (g.n() == 1) return 0;
    int best = g.n() * (g.n() - 1); // above any possible flow
    for (int t = 1; t < g.n(); ++t) {
        Dinic net(g.n());
        for (auto [u, v] : g.edges()) net.add(u, v, 1, 1);
        best = std::min(best, net.maxflow(0, t, best));
        if (best == 0) break;
    }
    return best;
}

int vertex_connectivity(const Graph& g) {
    int n = g.n();
    if (n == 0 || !is_connected(g)) throw std::invalid_argument("need a connected graph");
    if (g.edge_count() == static_cast<long long>(n) * (n - 1) / 2) return n - 1;
    const int big = 2 * n + 1;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.adjacent(s, t)) continue;
            // split vertices: v_in = 2v, v_out = 2v+1
            Dinic net(2 * n);
            for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, v == s || v == t ? big : 1);
            for (auto [u, v] : g.edges()) {
                net.add(2 * u + 1, 2 * v, big);
                net.add(2 * v + 1, 2 * u, big);
            }
            best = std::min(best, net.maxflow(2 * s + 1, 2 * t, best));
        }
    return best;
}

} // namespace agt
