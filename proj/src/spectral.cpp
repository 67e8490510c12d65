#include "agt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "agt/errors.hpp"
#include "agt/kernels.hpp"

namespace agt {

namespace {

long long isqrt(long long x) {
    if (x < 0) return -1;
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (s > 0 && s * s > x) --s;
    while ((s + 1) * (s + 1) <= x) ++s;
    return s;
}

bool is_square(long long x) {
    if (x < 0) return false;
    long long s = isqrt(x);
    return s * s == x;
}

} // namespace

std::optional<SrgParams> srg_check(const Graph& g) {
    int n = g.n();
    auto k = g.regular_degree();
    if (!k) return std::nullopt;
    long long m = g.edge_count();
    if (m == 0 || m == static_cast<long long>(n) * (n - 1) / 2) return std::nullopt;
    auto common = common_neighbor_counts_parallel(g);
    int lambda = -1, mu = -1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int& slot = g.adjacent(u, v) ? lambda : mu;
            if (slot < 0)
                slot = common[u][v];
            else if (slot != common[u][v])
                return std::nullopt;
        }
    // independent certification: A² = kI + λA + μ(J−I−A) entrywise
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            long long a2 = 0;
            for (int w : g.neighbors(u)) a2 += g.adjacent(w, v) ? 1 : 0;
            long long want = u == v ? *k : (g.adjacent(u, v) ? lambda : mu);
            if (a2 != want) return std::nullopt;
        }
    return SrgParams{n, *k, lambda, mu};
}

SrgSpectrum srg_spectrum(const SrgParams& p) {
    if (p.mu >= p.k) throw std::invalid_argument("spectrum formulas need mu < k");
    SrgSpectrum s;
    s.a = p.lambda - p.mu;
    s.delta = s.a * s.a + 4LL * (p.k - p.mu);
    long long root = isqrt(s.delta);
    long long balance = 2LL * p.k + (p.n - 1LL) * s.a;
    if (root * root != s.delta) {
        s.irrational = true;
        // conference case: equal multiplicities (n-1)/2 each
        if (balance == 0 && (p.n - 1) % 2 == 0) {
            s.m_theta = s.m_tau = (p.n - 1) / 2;
            s.feasible = true;
        }
        return s;
    }
    s.theta = (s.a + root) / 2;
    s.tau = (s.a - root) / 2;
    if (balance % root == 0) {
        long long w = balance / root;
        long long two_mt = p.n - 1 - w, two_mtau = p.n - 1 + w;
        if (two_mt >= 0 && two_mtau >= 0 && two_mt % 2 == 0 && two_mtau % 2 == 0) {
            s.m_theta = two_mt / 2;
            s.m_tau = two_mtau / 2;
            s.feasible = true;
        }
    }
    return s;
}

std::vector<BigInt> char_poly(const Graph& g) {
    int n = g.n();
    if (n > 64) throw bound_error("characteristic polynomial capped at 64 vertices");
    if (n == 0) return {BigInt(1)};
    using Matrix = std::vector<std::vector<BigInt>>;
    Matrix a(n, std::vector<BigInt>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a[u][v] = 1;
    // Faddeev–LeVerrier: M_1 = A, c_k = -tr(M_k)/k, M_{k+1} = A(M_k + c_k I)
    std::vector<BigInt> coeff(n + 1, 0);
    coeff[n] = 1;
    Matrix m = a;
    for (int k = 1; k <= n; ++k) {
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += m[i][i];
        BigInt c = -tr / k; // division is exact
        coeff[n - k] = c;
        if (k == n) break;
        Matrix next(n, std::vector<BigInt>(n, 0));
        for (int i = 0; i < n; ++i) m[i][i] += c;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) next[i][j] += m[l][j];
            }
        m = std::move(next);
    }
    return coeff;
}

namespace {

using Poly = std::vector<BigInt>; // low-to-high, no trailing zeros

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt content(const Poly& p) {
    BigInt g = 0;
    for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
    return g == 0 ? BigInt(1) : g;
}

void make_primitive(Poly& p) {
    BigInt g = content(p);
    for (auto& c : p) c /= g;
}

// pseudo-remainder of a by b (b nonzero)
Poly prem(Poly a, const Poly& b) {
    trim(a);
    int db = static_cast<int>(b.size()) - 1;
    const BigInt& lead = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        BigInt factor = a.back();
        for (auto& c : a) c *= lead;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= factor * b[i];
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = prem(a, b);
        a = std::move(b);
        b = std::move(r);
        if (!b.empty()) make_primitive(b);
    }
    make_primitive(a);
    return a;
}

} // namespace

int distinct_eigenvalue_count(const Graph& g) {
    if (g.n() == 0) return 0;
    Poly p = char_poly(g);
    Poly dp(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) dp[i - 1] = p[i] * static_cast<int>(i);
    Poly gcd = poly_gcd(p, dp);
    int deg_p = static_cast<int>(p.size()) - 1;
    int deg_g = static_cast<int>(gcd.size()) - 1;
    return deg_p - deg_g;
}

std::optional<IntersectionArray> intersection_array(const Graph& g) {
    if (g.n() == 0 || !is_connected(g)) throw std::invalid_argument("need a connected graph");
    auto dist = all_pairs_distances_serial(g);
    int d = 0;
    for (const auto& row : dist)
        for (int x : row) d = std::max(d, x);
    IntersectionArray arr;
    arr.b.assign(d, -1);
    arr.c.assign(d, -1);
    long long b0 = -1; // valency, from the i = 0 row
    for (int x = 0; x < g.n(); ++x)
        for (int y = 0; y < g.n(); ++y) {
            int i = dist[x][y];
            long long ci = 0, bi = 0;
            for (int w : g.neighbors(y)) {
                if (dist[x][w] == i - 1) ++ci;
                if (dist[x][w] == i + 1) ++bi;
            }
            if (i == 0) {
                if (b0 < 0) b0 = bi;
                if (bi != b0 || ci != 0) return std::nullopt;
                continue;
            }
            long long& cslot = arr.c[i - 1];
            if (cslot < 0)
                cslot = ci;
            else if (cslot != ci)
                return std::nullopt;
            if (i < d) {
                long long& bslot = arr.b[i];
                if (bslot < 0)
                    bslot = bi;
                else if (bslot != bi)
                    return std::nullopt;
            } else if (bi != 0) {
                return std::nullopt;
            }
        }
    if (d > 0) arr.b[0] = b0;
    else return std::nullopt; // single vertex: no array to speak of
    return arr;
}

long long moore_bound(int k, int d) {
    if (k < 2 || d < 1) throw std::invalid_argument("need k >= 2, d >= 1");
    long long bound = 1, term = k;
    for (int i = 0; i < d; ++i) {
        bound += term;
        term *= k - 1;
    }
    return bound;
}

bool is_moore(const Graph& g) {
    if (g.n() < 3 || !is_connected(g)) return false;
    auto k = g.regular_degree();
    if (!k || *k < 2) return false;
    auto d = diameter(g);
    auto gr = girth(g);
    if (!d || *d < 1 || !gr) return false;
    return g.n() == moore_bound(*k, *d) && *gr == 2 * *d + 1;
}

bool moore_d2_feasible(int k) {
    if (k < 2) throw std::invalid_argument("need k >= 2");
    SrgParams p{k * k + 1, k, 0, 1};
    return srg_spectrum(p).feasible;
}

std::optional<GeneralizedPolygon> generalized_polygon(const Graph& g) {
    if (g.n() < 2 || !is_connected(g)) throw std::invalid_argument("need a connected graph");
    auto parts = bipartition(g);
    if (!parts) throw std::invalid_argument("need a bipartite graph");
    auto d = diameter(g);
    auto gr = girth(g);
    if (!d || !gr || *gr != 2 * *d) return std::nullopt;
    auto side_valency = [&](const std::vector<int>& side) -> std::optional<int> {
        int val = g.degree(side.front());
        for (int v : side)
            if (g.degree(v) != val) return std::nullopt;
        return val;
    };
    auto v1 = side_valency(parts->first), v2 = side_valency(parts->second);
    if (!v1 || !v2) return std::nullopt;
    GeneralizedPolygon gp;
    gp.d = *d;
    gp.s = std::max(*v1, *v2) - 1;
    gp.t = std::min(*v1, *v2) - 1;
    gp.thick = gp.t >= 2;
    return gp;
}

bool feit_higman_admissible(int d, int s, int t) {
    if (d < 2 || s < 1 || t < 1) throw std::invalid_argument("need d >= 2, s,t >= 1");
    if (s < 2 || t < 2) return true; // thin polygons escape the theorem
    switch (d) {
        case 3: return true;
        case 4: return static_cast<long long>(s) <= static_cast<long long>(t) * t &&
                       static_cast<long long>(t) <= static_cast<long long>(s) * s;
        case 6: return is_square(static_cast<long long>(s) * t) &&
                       static_cast<long long>(s) <= static_cast<long long>(t) * t * t &&
                       static_cast<long long>(t) <= static_cast<long long>(s) * s * s;
        case 8: return is_square(2LL * s * t) &&
                       static_cast<long long>(s) <= static_cast<long long>(t) * t &&
                       static_cast<long long>(t) <= static_cast<long long>(s) * s;
        default: return false;
    }
}

} // namespace agt
