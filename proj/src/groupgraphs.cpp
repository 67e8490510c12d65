#include "agt/groupgraphs.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "agt/aut.hpp"
#include "agt/errors.hpp"
#include "agt/permgroup.hpp"

namespace agt {

namespace {

void validate_group(const FiniteGroup& g) {
    int n = g.n;
    if (n < 1 || static_cast<int>(g.mul.size()) != n)
        throw std::invalid_argument("malformed multiplication table");
    for (const auto& row : g.mul) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ragged table");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("table entry out of range");
    }
    // rows and columns must be permutations
    for (int a = 0; a < n; ++a) {
        std::vector<char> row(n, 0), col(n, 0);
        for (int b = 0; b < n; ++b) {
            if (row[g.mul[a][b]]++) throw std::invalid_argument("repeated entry in a row");
            if (col[g.mul[b][a]]++) throw std::invalid_argument("repeated entry in a column");
        }
    }
    // associativity: exhaustive at small order, sampled above
    auto assoc = [&](int a, int b, int c) {
        return g.mul[g.mul[a][b]][c] == g.mul[a][g.mul[b][c]];
    };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!assoc(a, b, c)) throw std::invalid_argument("table is not associative");
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int trial = 0; trial < 200000; ++trial)
            if (!assoc(pick(rng), pick(rng), pick(rng)))
                throw std::invalid_argument("table is not associative");
    }
}

FiniteGroup finish_group(std::vector<std::vector<int>> table) {
    FiniteGroup g;
    g.n = static_cast<int>(table.size());
    g.mul = std::move(table);
    validate_group(g);
    int id = -1;
    for (int e = 0; e < g.n; ++e) {
        bool ok = true;
        for (int x = 0; x < g.n && ok; ++x)
            ok = g.mul[e][x] == x && g.mul[x][e] == x;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) throw std::invalid_argument("table has no identity");
    g.id = id;
    g.inv.assign(g.n, -1);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (g.mul[a][b] == id && g.mul[b][a] == id) g.inv[a] = b;
    for (int a = 0; a < g.n; ++a)
        if (g.inv[a] < 0) throw std::invalid_argument("table element has no inverse");
    return g;
}

} // namespace

FiniteGroup group_from_table(const std::vector<std::vector<int>>& table) {
    return finish_group(table);
}

FiniteGroup group_from_perms(int degree, const std::vector<Perm>& gens) {
    for (const auto& p : gens)
        if (p.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    std::set<Perm> closure{Perm::identity(degree)};
    std::vector<Perm> queue{Perm::identity(degree)};
    while (!queue.empty()) {
        Perm p = std::move(queue.back());
        queue.pop_back();
        for (const auto& s : gens) {
            Perm q = p * s;
            if (closure.insert(q).second) {
                if (closure.size() > 100000) throw bound_error("group closure too large");
                queue.push_back(std::move(q));
            }
        }
    }
    std::vector<Perm> elems(closure.begin(), closure.end()); // lex order; identity first
    std::map<Perm, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = index.at(elems[a] * elems[b]);
    return finish_group(std::move(table));
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("need order >= 1");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return finish_group(std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.n * b.n;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x1 = 0; x1 < a.n; ++x1)
        for (int y1 = 0; y1 < b.n; ++y1)
            for (int x2 = 0; x2 < a.n; ++x2)
                for (int y2 = 0; y2 < b.n; ++y2)
                    table[x1 * b.n + y1][x2 * b.n + y2] =
                        a.mul[x1][x2] * b.n + b.mul[y1][y2];
    return finish_group(std::move(table));
}

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
    std::set<int> closure{g.id};
    std::vector<int> queue{g.id};
    for (int x : gens)
        if (x < 0 || x >= g.n) throw std::invalid_argument("generator out of range");
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (int s : gens) {
            int y = g.mul[x][s];
            if (closure.insert(y).second) queue.push_back(y);
        }
    }
    return {closure.begin(), closure.end()};
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
    if (h.empty()) return false;
    std::set<int> set(h.begin(), h.end());
    for (int x : h)
        if (x < 0 || x >= g.n) return false;
    if (!set.count(g.id)) return false;
    for (int a : h) {
        if (!set.count(g.inv[a])) return false;
        for (int b : h)
            if (!set.count(g.mul[a][b])) return false;
    }
    return true;
}

Graph cayley_graph(const FiniteGroup& g, const std::vector<int>& connection) {
    std::set<int> c(connection.begin(), connection.end());
    for (int x : c) {
        if (x < 0 || x >= g.n) throw std::invalid_argument("connection element out of range");
        if (x == g.id) throw std::invalid_argument("identity in connection set makes loops");
        if (!c.count(g.inv[x]))
            throw std::invalid_argument("connection set not inverse-closed");
    }
    Graph graph(g.n);
    for (int v = 0; v < g.n; ++v)
        for (int x : c) graph.add_edge(v, g.mul[x][v]); // edge v ~ xv since (xv)v⁻¹ = x
    return graph;
}

namespace {

// right cosets Hg, ordered by least representative
std::vector<std::vector<int>> right_cosets(const FiniteGroup& g, const std::vector<int>& h) {
    std::vector<std::vector<int>> cosets;
    std::vector<char> seen(g.n, 0);
    for (int rep = 0; rep < g.n; ++rep) {
        if (seen[rep]) continue;
        std::vector<int> coset;
        for (int x : h) coset.push_back(g.mul[x][rep]);
        std::sort(coset.begin(), coset.end());
        for (int x : coset) seen[x] = 1;
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const std::vector<int>& h) {
    std::vector<std::vector<int>> cosets;
    std::vector<char> seen(g.n, 0);
    for (int rep = 0; rep < g.n; ++rep) {
        if (seen[rep]) continue;
        std::vector<int> coset;
        for (int x : h) coset.push_back(g.mul[rep][x]);
        std::sort(coset.begin(), coset.end());
        for (int x : coset) seen[x] = 1;
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        a[i] < b[j] ? ++i : ++j;
    }
    return false;
}

} // namespace

Graph coset_graph(const FiniteGroup& g, const std::vector<int>& h, const std::vector<int>& k) {
    if (!is_subgroup(g, h) || !is_subgroup(g, k))
        throw std::invalid_argument("coset graph needs subgroups");
    auto hc = right_cosets(g, h), kc = right_cosets(g, k);
    int nh = static_cast<int>(hc.size());
    Graph graph(nh + static_cast<int>(kc.size()));
    for (int i = 0; i < nh; ++i)
        for (size_t j = 0; j < kc.size(); ++j)
            if (intersects(hc[i], kc[j])) graph.add_edge(i, nh + static_cast<int>(j));
    return graph;
}

Graph double_coset_graph(const FiniteGroup& g, const std::vector<int>& h,
                         const std::vector<int>& s) {
    if (!is_subgroup(g, h)) throw std::invalid_argument("H must be a subgroup");
    std::set<int> sset(s.begin(), s.end());
    if (sset.empty()) throw std::invalid_argument("empty connection set");
    for (int x : sset) {
        if (x < 0 || x >= g.n) throw std::invalid_argument("element out of range");
        if (!sset.count(g.inv[x])) throw std::invalid_argument("S must satisfy S = S⁻¹");
    }
    for (int x : h)
        if (sset.count(x)) throw std::invalid_argument("S must avoid H");
    for (int x : sset)
        for (int h1 : h)
            for (int h2 : h)
                if (!sset.count(g.mul[g.mul[h1][x]][h2]))
                    throw std::invalid_argument("S must be a union of H-double-cosets");
    auto cosets = left_cosets(g, h);
    int n = static_cast<int>(cosets.size());
    Graph graph(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (sset.count(g.mul[g.inv[cosets[i][0]]][cosets[j][0]]))
                graph.add_edge(i, j);
    return graph;
}

Graph frucht_graph(const FiniteGroup& g) {
    if (g.n < 2) throw std::invalid_argument("the construction needs |G| >= 2");
    std::vector<int> color(g.n, 0);
    int next = 1;
    for (int x = 0; x < g.n; ++x)
        if (x != g.id) color[x] = next++;
    // count gadget vertices first: an arc of color k adds 2k+3
    long long total = g.n;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            if (i == j) continue;
            total += 2LL * color[g.mul[i][g.inv[j]]] + 3;
        }
    if (total > 20000) throw bound_error("gadget graph too large");
    Graph graph(static_cast<int>(total));
    int fresh = g.n;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            if (i == j) continue;
            int k = color[g.mul[i][g.inv[j]]];
            // path of length k+2 from i to j with inner vertices u_1..u_{k+1};
            // a pendant hangs off u_1..u_k and a 2-chain off u_{k+1}
            std::vector<int> inner(k + 1);
            for (int t = 0; t <= k; ++t) inner[t] = fresh++;
            graph.add_edge(i, inner[0]);
            for (int t = 0; t + 1 <= k; ++t) graph.add_edge(inner[t], inner[t + 1]);
            graph.add_edge(inner[k], j);
            for (int t = 0; t < k; ++t) {
                int pendant = fresh++;
                graph.add_edge(inner[t], pendant);
            }
            int c1 = fresh++, c2 = fresh++;
            graph.add_edge(inner[k], c1);
            graph.add_edge(c1, c2);
        }
    return graph;
}

namespace {

// Search for a regular subgroup of Aut(G): pick the automorphism r_v sending
// the base vertex 0 to v, one vertex at a time, closing eagerly under
// products. Everything chosen must stay fixed-point-free off the identity.
struct RegularSearch {
    int n;
    std::vector<std::vector<Perm>> candidates;

    bool propagate(std::vector<std::optional<Perm>>& r, std::vector<int> dirty) const {
        auto consider = [&](Perm p) {
            int target = p(0);
            if (r[target]) return *r[target] == p; // identity at 0 kills stabilizer leaks
            if (has_fixed_point(p)) return false;
            r[target] = std::move(p);
            dirty.push_back(target);
            return true;
        };
        while (!dirty.empty()) {
            int v = dirty.back();
            dirty.pop_back();
            for (int a = 0; a < n; ++a) {
                if (!r[a]) continue;
                if (!consider(*r[a] * *r[v]) || !consider(*r[v] * *r[a])) return false;
            }
        }
        return true;
    }

    static bool has_fixed_point(const Perm& p) {
        for (int x = 0; x < p.degree(); ++x)
            if (p(x) == x) return true;
        return false;
    }

    bool solve(std::vector<std::optional<Perm>>& r) const {
        int w = -1;
        for (int v = 0; v < n; ++v)
            if (!r[v]) {
                w = v;
                break;
            }
        if (w < 0) return true;
        for (const Perm& cand : candidates[w]) {
            auto copy = r;
            copy[w] = cand;
            if (propagate(copy, {w}) && solve(copy)) {
                r = copy;
                return true;
            }
        }
        return false;
    }
};

} // namespace

std::optional<std::pair<FiniteGroup, std::vector<int>>> is_cayley(const Graph& g) {
    int n = g.n();
    if (n == 0) return std::nullopt;
    if (n == 1) return std::pair{cyclic_group(1), std::vector<int>{}};
    PermGroup aut = automorphism_group(g);
    if (!aut.is_transitive()) return std::nullopt;
    PermGroup stab = aut.stabilizer(0);
    auto stab_elems = stab.elements(200000);
    // transversal: one automorphism sending 0 to each vertex
    std::vector<std::optional<Perm>> to(n);
    to[0] = Perm::identity(n);
    std::vector<int> queue{0};
    auto gens = aut.generators();
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (const auto& s : gens) {
            int w = s(v);
            if (!to[w]) {
                to[w] = *to[v] * s;
                queue.push_back(w);
            }
        }
    }
    RegularSearch search;
    search.n = n;
    search.candidates.resize(n);
    for (int v = 1; v < n; ++v) {
        for (const auto& s : stab_elems) {
            Perm cand = s * *to[v]; // maps 0 to v
            if (!RegularSearch::has_fixed_point(cand)) search.candidates[v].push_back(cand);
        }
        if (search.candidates[v].empty()) return std::nullopt;
        std::sort(search.candidates[v].begin(), search.candidates[v].end());
    }
    std::vector<std::optional<Perm>> r(n);
    r[0] = Perm::identity(n);
    if (!search.solve(r)) return std::nullopt;
    // group law on vertex indices: u·v = r_v(u), identity 0
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) table[u][v] = (*r[v])(u);
    FiniteGroup group = finish_group(std::move(table));
    std::vector<int> connection = g.neighbors(0);
    return std::pair{std::move(group), std::move(connection)};
}

FiniteGroup parse_cayley_table(const std::string& text) {
    std::istringstream in(text);
    int n;
    if (!(in >> n) || n < 1) throw parse_error("bad group order");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (auto& row : table)
        for (auto& x : row)
            if (!(in >> x) || x < 0 || x >= n) throw parse_error("bad table entry");
    std::string rest;
    if (in >> rest) throw parse_error("trailing data after table");
    try {
        return finish_group(std::move(table));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

std::string format_cayley_table(const FiniteGroup& g) {
    std::ostringstream out;
    out << g.n << '\n';
    for (const auto& row : g.mul) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
        out << '\n';
    }
    return out.str();
}

} // namespace agt
