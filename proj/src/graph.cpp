#include "agt/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "agt/kernels.hpp"

namespace agt {

static void check_endpoint(int v, int n) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    check_endpoint(u, n());
    check_endpoint(v, n());
    if (u == v) throw std::invalid_argument("loop rejected");
    adj_[u].set(v);
    adj_[v].set(u);
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (const auto& row : adj_) twice += static_cast<long long>(row.count());
    return twice / 2;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (auto u = adj_[v].find_first(); u != Bitset::npos; u = adj_[v].find_next(u))
        out.push_back(static_cast<int>(u));
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n(); ++u)
        for (auto v = adj_[u].find_next(u); v != Bitset::npos; v = adj_[u].find_next(v))
            out.emplace_back(u, static_cast<int>(v));
    return out;
}

std::optional<int> Graph::regular_degree() const {
    if (n() == 0) return std::nullopt;
    int k = degree(0);
    for (int v = 1; v < n(); ++v)
        if (degree(v) != k) return std::nullopt;
    return k;
}

Graph complement(const Graph& g) {
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    int m = static_cast<int>(es.size());
    Graph h(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) h.add_edge(i, j);
        }
    return h;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    int ng = g.n(), nh = h.n();
    Graph p(ng * nh);
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b) {
            for (int d : h.neighbors(b))
                if (b < d) p.add_edge(a * nh + b, a * nh + d);
            for (int c : g.neighbors(a))
                if (a < c) p.add_edge(a * nh + b, c * nh + b);
        }
    return p;
}

Graph k_fold_subdivision(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("subdivision factor must be >= 1");
    if (k == 1) return g;
    auto es = g.edges();
    Graph h(g.n() + static_cast<int>(es.size()) * (k - 1));
    int next = g.n();
    for (auto [u, v] : es) {
        int prev = u;
        for (int i = 0; i < k - 1; ++i) {
            h.add_edge(prev, next);
            prev = next++;
        }
        h.add_edge(prev, v);
    }
    return h;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    Graph h(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph delete_vertex(const Graph& g, int v) {
    check_endpoint(v, g.n());
    std::vector<int> keep;
    for (int u = 0; u < g.n(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

Graph relabel(const Graph& g, const std::vector<int>& image) {
    if (static_cast<int>(image.size()) != g.n()) throw std::invalid_argument("relabel size mismatch");
    Graph h(g.n());
    for (auto [u, v] : g.edges()) h.add_edge(image[u], image[v]);
    return h;
}

DistanceTable::DistanceTable(std::vector<std::vector<int>> d) : d_(std::move(d)) {
    for (const auto& row : d_)
        if (row.size() != d_.size()) throw std::invalid_argument("distance table not square");
}

std::optional<int> DistanceTable::operator()(int u, int v) const {
    if (d_[u][v] < 0) return std::nullopt;
    return d_[u][v];
}

int DistanceTable::at(int u, int v) const {
    if (d_[u][v] < 0) throw std::invalid_argument("unreachable pair");
    return d_[u][v];
}

DistanceTable metrics(const Graph& g) {
    return DistanceTable(all_pairs_distances_parallel(g));
}

std::optional<int> girth(const Graph& g) {
    // BFS from every root; a non-tree edge (u,w) with w != parent(u) closes a
    // walk of length d[u]+d[w]+1 that contains a cycle no longer than itself,
    // and the minimum over all roots attains the true girth.
    int best = -1;
    std::vector<int> dist(g.n()), parent(g.n());
    for (int r = 0; r < g.n(); ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[r] = 0;
        q.push(r);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u] && parent[w] != u) {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::optional<int> diameter(const Graph& g) {
    auto d = all_pairs_distances_serial(g);
    int best = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v) {
            if (d[u][v] < 0) return std::nullopt;
            best = std::max(best, d[u][v]);
        }
    return best;
}

bool is_connected(const Graph& g) {
    return components(g).size() <= 1;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    q.push(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> sides;
    for (int v = 0; v < g.n(); ++v)
        (color[v] == 0 ? sides.first : sides.second).push_back(v);
    return sides;
}

} // namespace agt
