#include "agt/designs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "agt/errors.hpp"
#include "agt/field.hpp"

namespace agt {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Graph levi_graph(const IncidenceStructure& s) {
    Graph g(s.v + static_cast<int>(s.blocks.size()));
    for (size_t b = 0; b < s.blocks.size(); ++b)
        for (int x : s.blocks[b]) {
            if (x < 0 || x >= s.v) throw std::invalid_argument("block point out of range");
            g.add_edge(x, s.v + static_cast<int>(b));
        }
    return g;
}

namespace {

// visit every t-subset of 0..v-1
template <class F>
void for_each_subset(int v, int t, F&& visit) {
    std::vector<int> pick(t);
    for (int i = 0; i < t; ++i) pick[i] = i;
    if (t > v) return;
    for (;;) {
        visit(pick);
        int i = t - 1;
        while (i >= 0 && pick[i] == v - t + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
    }
}

bool contains_all(const std::vector<int>& block, const std::vector<int>& subset) {
    return std::includes(block.begin(), block.end(), subset.begin(), subset.end());
}

} // namespace

std::optional<DesignParams> is_t_design(const IncidenceStructure& s, int t) {
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    if (s.blocks.empty() || s.v < 1) return std::nullopt;
    size_t k = s.blocks[0].size();
    for (const auto& b : s.blocks) {
        if (b.size() != k) return std::nullopt; // non-uniform
        if (!std::is_sorted(b.begin(), b.end()) ||
            std::adjacent_find(b.begin(), b.end()) != b.end())
            throw std::invalid_argument("blocks must be sorted and duplicate-free");
    }
    if (t > static_cast<int>(k) || t > s.v) return std::nullopt;
    long long lambda = -1;
    bool constant = true;
    for_each_subset(s.v, t, [&](const std::vector<int>& sub) {
        if (!constant) return;
        long long count = 0;
        for (const auto& b : s.blocks)
            if (contains_all(b, sub)) ++count;
        if (lambda < 0)
            lambda = count;
        else if (count != lambda)
            constant = false;
    });
    if (!constant || lambda < 1) return std::nullopt;
    DesignParams p;
    p.t = t;
    p.v = s.v;
    p.k = static_cast<int>(k);
    p.lambda = lambda;
    p.b = static_cast<long long>(s.blocks.size());
    // r = λ_1 is integral because it counts blocks through an actual point
    auto r = lambda_s(p, std::min(1, t));
    p.r = r.numerator() / r.denominator();
    return p;
}

Rational lambda_s(const DesignParams& p, int s) {
    if (s < 0 || s > p.t) throw std::invalid_argument("s out of range");
    // λ_s·C(k-s, t-s) = λ_t·C(v-s, t-s)
    Rational value(p.lambda, 1);
    value *= Rational(binomial(p.v - s, p.t - s), binomial(p.k - s, p.t - s));
    return value;
}

SteinerChain steiner_counts(int t, int k, int v) {
    if (!(1 < t && t < k && k < v)) throw std::invalid_argument("need 1 < t < k < v");
    SteinerChain chain;
    for (int p = 0; p <= t; ++p) {
        Rational value(1, 1);
        for (int j = p; j < t; ++j) value *= Rational(v - j, k - j);
        bool integral = value.denominator() == 1;
        chain.values.push_back(value);
        chain.integral.push_back(integral);
        chain.all_integral = chain.all_integral && integral;
    }
    return chain;
}

namespace {

// largest t with a uniform design structure; the valid t form an interval
std::optional<DesignParams> max_t_design(const IncidenceStructure& s) {
    std::optional<DesignParams> best;
    for (int t = 1; t <= s.v; ++t) {
        if (!s.blocks.empty() && t > static_cast<int>(s.blocks[0].size())) break;
        auto p = is_t_design(s, t);
        if (!p) break;
        best = p;
    }
    return best;
}

} // namespace

IncidenceStructure contraction(const IncidenceStructure& s, int x) {
    if (x < 0 || x >= s.v) throw std::invalid_argument("point out of range");
    auto params = max_t_design(s);
    if (!params || params->lambda != 1)
        throw std::invalid_argument("contraction needs a Steiner system");
    if (params->t < 3)
        throw std::invalid_argument("contraction of a t=2 Steiner system is not a design");
    IncidenceStructure out;
    out.v = s.v - 1;
    for (const auto& b : s.blocks) {
        if (!std::binary_search(b.begin(), b.end(), x)) continue;
        std::vector<int> nb;
        for (int y : b)
            if (y != x) nb.push_back(y > x ? y - 1 : y);
        out.blocks.push_back(std::move(nb));
    }
    auto check = is_t_design(out, params->t - 1);
    if (!check || check->lambda != 1 || check->k != params->k - 1)
        throw std::logic_error("contraction failed to verify as a Steiner system");
    return out;
}

IncidenceStructure fano_plane() {
    IncidenceStructure s;
    s.v = 7;
    s.blocks = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
    return s;
}

namespace {

// normalized representatives of 1-dim subspaces of F_q^dim: first nonzero
// coordinate 1, listed in lexicographic order of the coordinate tuple
std::vector<std::vector<int>> projective_points(const FiniteField& f, int dim) {
    std::vector<std::vector<int>> points;
    std::vector<int> x(dim, 0);
    for (;;) {
        auto lead = std::find_if(x.begin(), x.end(), [](int c) { return c != 0; });
        if (lead != x.end() && *lead == 1) points.push_back(x);
        int i = dim - 1;
        while (i >= 0 && x[i] == f.q() - 1) x[i--] = 0;
        if (i < 0) break;
        ++x[i];
    }
    return points;
}

int dot(const FiniteField& f, const std::vector<int>& a, const std::vector<int>& b) {
    int sum = 0;
    for (size_t i = 0; i < a.size(); ++i) sum = f.add(sum, f.mul(a[i], b[i]));
    return sum;
}

} // namespace

IncidenceStructure pg2(int q) {
    if (!is_prime_power(q)) throw std::invalid_argument("q must be a prime power");
    if (q > 16) throw bound_error("projective plane order capped at 16");
    FiniteField f(q);
    auto points = projective_points(f, 3);
    IncidenceStructure s;
    s.v = static_cast<int>(points.size());
    // lines indexed by the same representatives as dual coordinates
    for (const auto& u : points) {
        std::vector<int> line;
        for (int i = 0; i < s.v; ++i)
            if (dot(f, u, points[i]) == 0) line.push_back(i);
        s.blocks.push_back(std::move(line));
    }
    return s;
}

IncidenceStructure w_quadrangle(int q) {
    if (!is_prime_power(q)) throw std::invalid_argument("q must be a prime power");
    if (q > 5) throw bound_error("symplectic quadrangle order capped at 5");
    FiniteField f(q);
    auto points = projective_points(f, 4);
    int np = static_cast<int>(points.size());
    // alternating form B(u,v) = u H v^T with H = [[0,1,0,0],[-1,0,0,0],[0,0,0,1],[0,0,-1,0]]
    auto form = [&](const std::vector<int>& u, const std::vector<int>& v) {
        int s1 = f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0]));
        int s2 = f.sub(f.mul(u[2], v[3]), f.mul(u[3], v[2]));
        return f.add(s1, s2);
    };
    std::set<std::vector<int>> lines;
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) {
            if (form(points[i], points[j]) != 0) continue;
            // span{p_i, p_j}: all q+1 projective points a·p_i + b·p_j
            std::set<int> span{i, j};
            for (int a = 0; a < f.q(); ++a) {
                std::vector<int> w(4);
                for (int c = 0; c < 4; ++c)
                    w[c] = f.add(f.mul(a, points[i][c]), points[j][c]);
                // normalize to the representative with leading 1
                auto lead = std::find_if(w.begin(), w.end(), [](int x) { return x != 0; });
                int scale = f.inv(*lead);
                for (int& x : w) x = f.mul(x, scale);
                span.insert(static_cast<int>(std::lower_bound(points.begin(), points.end(), w) -
                                             points.begin()));
            }
            lines.insert(std::vector<int>(span.begin(), span.end()));
        }
    IncidenceStructure s;
    s.v = np;
    s.blocks.assign(lines.begin(), lines.end());
    long long expect = static_cast<long long>(q * q + 1) * (q + 1);
    if (static_cast<long long>(s.blocks.size()) != expect)
        throw std::logic_error("totally isotropic line count mismatch");
    return s;
}

namespace {

// duads of {0..5} in colex order; index lookup via position
std::vector<std::pair<int, int>> duads() {
    std::vector<std::pair<int, int>> out;
    for (int b = 1; b < 6; ++b)
        for (int a = 0; a < b; ++a) out.emplace_back(a, b);
    return out;
}

void matchings(std::vector<int>& used, std::vector<int>& current,
               const std::map<std::pair<int, int>, int>& duad_index,
               std::vector<std::vector<int>>& out) {
    int a = 0;
    while (a < 6 && used[a]) ++a;
    if (a == 6) {
        auto sorted = current;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(sorted);
        return;
    }
    used[a] = 1;
    for (int b = a + 1; b < 6; ++b) {
        if (used[b]) continue;
        used[b] = 1;
        current.push_back(duad_index.at({a, b}));
        matchings(used, current, duad_index, out);
        current.pop_back();
        used[b] = 0;
    }
    used[a] = 0;
}

} // namespace

IncidenceStructure duad_syntheme() {
    auto ds = duads();
    std::map<std::pair<int, int>, int> index;
    for (size_t i = 0; i < ds.size(); ++i) index[ds[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> synthemes;
    std::vector<int> used(6, 0), current;
    matchings(used, current, index, synthemes);
    std::sort(synthemes.begin(), synthemes.end());
    IncidenceStructure s;
    s.v = 15;
    s.blocks = std::move(synthemes);
    return s;
}

IncidenceStructure gq22_from_k6() {
    // points = edges of K6, lines = 1-factors: the same duad/syntheme structure
    return duad_syntheme();
}

IncidenceStructure dual_structure(const IncidenceStructure& s) {
    IncidenceStructure out;
    out.v = static_cast<int>(s.blocks.size());
    out.blocks.assign(s.v, {});
    for (size_t b = 0; b < s.blocks.size(); ++b)
        for (int x : s.blocks[b]) out.blocks[x].push_back(static_cast<int>(b));
    return out;
}

bool is_symmetric_design(const IncidenceStructure& s) {
    auto p = is_t_design(s, 2);
    return p && p->b == p->v;
}

std::string format_incidence(const IncidenceStructure& s) {
    std::ostringstream out;
    out << s.v << ' ' << s.blocks.size() << '\n';
    for (const auto& b : s.blocks) {
        for (size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
        out << '\n';
    }
    return out.str();
}

IncidenceStructure parse_incidence(const std::string& text) {
    std::istringstream in(text);
    IncidenceStructure s;
    long long bcount;
    if (!(in >> s.v >> bcount) || s.v < 0 || bcount < 0)
        throw parse_error("bad incidence header");
    std::string line;
    std::getline(in, line); // rest of header line
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::vector<int> block;
        int x;
        while (ls >> x) {
            if (x < 0 || x >= s.v) throw parse_error("block point out of range");
            block.push_back(x);
        }
        if (!ls.eof()) throw parse_error("non-numeric block entry");
        std::sort(block.begin(), block.end());
        if (std::adjacent_find(block.begin(), block.end()) != block.end())
            throw parse_error("repeated point in block");
        s.blocks.push_back(std::move(block));
    }
    if (static_cast<long long>(s.blocks.size()) != bcount)
        throw parse_error("block count does not match header");
    return s;
}

} // namespace agt
