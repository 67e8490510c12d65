#include "agt/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "agt/designs.hpp"
#include "agt/errors.hpp"
#include "agt/field.hpp"
#include "agt/perm.hpp"

namespace agt {

namespace {

constexpr int kMaxVertices = 4096;

void check_size(long long n) {
    if (n > kMaxVertices) throw bound_error("construction exceeds the vertex cap");
}

} // namespace

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    check_size(n);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    check_size(n);
    return Graph(n);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    check_size(n);
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    check_size(n);
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("need positive part sizes");
    check_size(static_cast<long long>(m) + n);
    Graph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
    return g;
}

Graph hypercube(int k) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    if (k > 12) throw bound_error("hypercube dimension capped at 12");
    int n = 1 << k;
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < k; ++b)
            if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
    return g;
}

std::vector<std::vector<int>> colex_subsets(int v, int k) {
    std::vector<std::vector<int>> subsets;
    if (k == 0) return {{}};
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    if (k > v) return subsets;
    for (;;) {
        subsets.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == v - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return subsets;
}

Graph johnson(int v, int k, int i) {
    if (!(v >= k && k >= i && i >= 0)) throw std::invalid_argument("need v >= k >= i >= 0");
    auto subsets = colex_subsets(v, k);
    check_size(static_cast<long long>(subsets.size()));
    int n = static_cast<int>(subsets.size());
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::vector<int> meet;
            std::set_intersection(subsets[a].begin(), subsets[a].end(), subsets[b].begin(),
                                  subsets[b].end(), std::back_inserter(meet));
            if (static_cast<int>(meet.size()) == i) g.add_edge(a, b);
        }
    return g;
}

Graph odd_graph(int k) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    return johnson(2 * k + 1, k, 0);
}

Graph petersen() { return odd_graph(2); }

Graph paley(int q) {
    if (q % 4 != 1) throw std::invalid_argument("Paley graphs need q == 1 (mod 4)");
    FiniteField f(q); // rejects non prime powers
    check_size(q);
    Graph g(q);
    const auto& sq = f.squares();
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y)
            if (sq.count(f.sub(x, y))) g.add_edge(x, y);
    return g;
}

Graph hamming(int d, int q) {
    if (d < 1 || q < 2) throw std::invalid_argument("need d >= 1, q >= 2");
    long long n = 1;
    for (int i = 0; i < d; ++i) {
        n *= q;
        check_size(n);
    }
    Graph g(static_cast<int>(n));
    // words row-major: first coordinate most significant
    for (int v = 0; v < n; ++v) {
        int place = 1;
        for (int c = d - 1; c >= 0; --c) {
            int digit = v / place % q;
            for (int repl = digit + 1; repl < q; ++repl)
                g.add_edge(v, v + (repl - digit) * place);
            place *= q;
        }
    }
    return g;
}

Graph heawood() { return levi_graph(fano_plane()); }

Graph tutte_coxeter() { return levi_graph(duad_syntheme()); }

Heptad fano_heptad() {
    return {{{0, 1, 2}}, {{0, 3, 4}}, {{0, 5, 6}}, {{1, 3, 5}},
            {{1, 4, 6}}, {{2, 3, 6}}, {{2, 4, 5}}};
}

Graph coxeter() {
    Graph kneser = odd_graph(3);
    auto triples = colex_subsets(7, 3);
    auto fano = fano_heptad();
    std::set<Triple> lines(fano.begin(), fano.end());
    std::vector<int> keep;
    for (size_t idx = 0; idx < triples.size(); ++idx) {
        Triple t{triples[idx][0], triples[idx][1], triples[idx][2]};
        if (!lines.count(t)) keep.push_back(static_cast<int>(idx));
    }
    return induced_subgraph(kneser, keep);
}

namespace {

int triple_meet(const Triple& a, const Triple& b) {
    int count = 0;
    for (int x : a)
        for (int y : b)
            if (x == y) ++count;
    return count;
}

void heptad_search(const std::vector<Triple>& triples, size_t next, Heptad& chosen,
                   std::array<int, 7>& point_use, std::vector<Heptad>& out) {
    if (chosen.size() == 7) {
        out.push_back(chosen);
        return;
    }
    for (size_t i = next; i < triples.size(); ++i) {
        const Triple& t = triples[i];
        bool ok = std::all_of(chosen.begin(), chosen.end(),
                              [&](const Triple& c) { return triple_meet(c, t) == 1; }) &&
                  std::all_of(t.begin(), t.end(), [&](int x) { return point_use[x] < 3; });
        if (!ok) continue;
        chosen.push_back(t);
        for (int x : t) ++point_use[x];
        heptad_search(triples, i + 1, chosen, point_use, out);
        chosen.pop_back();
        for (int x : t) --point_use[x];
    }
}

Heptad apply_perm(const Heptad& h, const Perm& p) {
    Heptad out;
    for (const Triple& t : h) {
        Triple img{p(t[0]), p(t[1]), p(t[2])};
        std::sort(img.begin(), img.end());
        out.push_back(img);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

HeptadOrbits heptads() {
    auto raw = colex_subsets(7, 3);
    std::vector<Triple> triples;
    for (const auto& t : raw) triples.push_back({t[0], t[1], t[2]});
    std::sort(triples.begin(), triples.end());
    std::vector<Heptad> all;
    Heptad chosen;
    std::array<int, 7> point_use{};
    heptad_search(triples, 0, chosen, point_use, all);
    // split under the alternating group, generated by a 3-cycle and the 7-cycle
    std::vector<Perm> gens{Perm::parse_cycles("(0 1 2)", 7), Perm::parse_cycles("(0 1 2 3 4 5 6)", 7)};
    std::set<Heptad> orbit{fano_heptad()};
    std::vector<Heptad> queue{fano_heptad()};
    while (!queue.empty()) {
        Heptad h = std::move(queue.back());
        queue.pop_back();
        for (const auto& p : gens) {
            Heptad img = apply_perm(h, p);
            if (orbit.insert(img).second) queue.push_back(std::move(img));
        }
    }
    HeptadOrbits out;
    for (const auto& h : all)
        (orbit.count(h) ? out.orbit1 : out.orbit2).push_back(h);
    return out;
}

Graph hoffman_singleton() {
    auto raw = colex_subsets(7, 3);
    std::vector<Triple> triples;
    for (const auto& t : raw) triples.push_back({t[0], t[1], t[2]});
    auto orbits = heptads();
    auto& hs = orbits.orbit1; // already sorted by construction order
    std::sort(hs.begin(), hs.end());
    Graph g(static_cast<int>(triples.size() + hs.size()));
    // triples adjacent iff disjoint
    for (size_t a = 0; a < triples.size(); ++a)
        for (size_t b = a + 1; b < triples.size(); ++b)
            if (triple_meet(triples[a], triples[b]) == 0)
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
    // heptad adjacent to the triples it contains; heptads mutually non-adjacent
    for (size_t h = 0; h < hs.size(); ++h)
        for (const Triple& t : hs[h]) {
            auto it = std::find(triples.begin(), triples.end(), t);
            g.add_edge(static_cast<int>(it - triples.begin()),
                       static_cast<int>(triples.size() + h));
        }
    return g;
}

Graph folkman() {
    // K5 with every edge subdivided and every original vertex duplicated:
    // 0-4 originals, 5-9 duplicates, 10-19 subdivision vertices in lex edge order
    Graph g(20);
    int e = 10;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            g.add_edge(i, e);
            g.add_edge(5 + i, e);
            g.add_edge(j, e);
            g.add_edge(5 + j, e);
            ++e;
        }
    return g;
}

Graph shrikhande() {
    Graph g(16);
    const int diff[6][2] = {{1, 0}, {0, 1}, {1, 1}, {3, 0}, {0, 3}, {3, 3}};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (const auto& d : diff) {
                int u = 4 * a + b;
                int v = 4 * ((a + d[0]) % 4) + (b + d[1]) % 4;
                if (u < v) g.add_edge(u, v);
            }
    return g;
}

} // namespace agt
