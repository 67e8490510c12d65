#include "agt/kernels.hpp"

namespace agt {

static void bfs_row(const Graph& g, int src, std::vector<int>& dist) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> frontier{src}, next;
    dist[src] = 0;
    int d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (int u : frontier)
            for (auto v = g.row(u).find_first(); v != Bitset::npos; v = g.row(u).find_next(v))
                if (dist[v] < 0) {
                    dist[v] = d;
                    next.push_back(static_cast<int>(v));
                }
        frontier.swap(next);
    }
}

std::vector<std::vector<int>> all_pairs_distances_serial(const Graph& g) {
    std::vector<std::vector<int>> d(g.n(), std::vector<int>(g.n()));
    for (int s = 0; s < g.n(); ++s) bfs_row(g, s, d[s]);
    return d;
}

std::vector<std::vector<int>> all_pairs_distances_parallel(const Graph& g) {
    std::vector<std::vector<int>> d(g.n(), std::vector<int>(g.n()));
#pragma omp parallel for schedule(dynamic, 8)
    for (int s = 0; s < g.n(); ++s) bfs_row(g, s, d[s]);
    return d;
}

std::vector<std::vector<int>> common_neighbor_counts_serial(const Graph& g) {
    std::vector<std::vector<int>> c(g.n(), std::vector<int>(g.n()));
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            c[u][v] = static_cast<int>((g.row(u) & g.row(v)).count());
    return c;
}

std::vector<std::vector<int>> common_neighbor_counts_parallel(const Graph& g) {
    std::vector<std::vector<int>> c(g.n(), std::vector<int>(g.n()));
#pragma omp parallel for schedule(static)
    for (int u = 0; u < g.n(); ++u) {
        Bitset tmp(g.n());
        for (int v = 0; v < g.n(); ++v) {
            tmp = g.row(u);
            tmp &= g.row(v);
            c[u][v] = static_cast<int>(tmp.count());
        }
    }
    return c;
}

} // namespace agt
