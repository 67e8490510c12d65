#pragma once

#include <optional>
#include <vector>

#include "agt/graph.hpp"
#include "agt/permgroup.hpp" // BigInt

namespace agt {

struct SrgParams {
    int n = 0, k = 0, lambda = 0, mu = 0;

    bool operator==(const SrgParams&) const = default;
};

// Exact restricted eigenvalues θ,τ = (a ± √Δ)/2 with a = λ-μ and
// Δ = (λ-μ)² + 4(k-μ). When Δ is a perfect square both are integers; the
// conference case keeps them symbolic. Multiplicities are present iff the
// trace system has a nonnegative integral solution (the feasibility test).
struct SrgSpectrum {
    long long a = 0;
    long long delta = 0;
    bool irrational = false;
    std::optional<long long> theta, tau;
    std::optional<long long> m_theta, m_tau;
    bool feasible = false;
};

// present iff regular, neither complete nor empty, constant common-neighbor
// counts on adjacent and on non-adjacent pairs; certified against
// A² = kI + λA + μ(J−I−A) over the integers
std::optional<SrgParams> srg_check(const Graph& g);
SrgSpectrum srg_spectrum(const SrgParams& p); // requires μ < k

// characteristic polynomial of the adjacency matrix, exact integer
// coefficients c[0..n] with c[i] the coefficient of x^i; n ≤ 64
std::vector<BigInt> char_poly(const Graph& g);
int distinct_eigenvalue_count(const Graph& g);

// b_0..b_{d-1} and c_1..c_d of a distance-regular graph
struct IntersectionArray {
    std::vector<long long> b, c;
    int d() const { return static_cast<int>(b.size()); }

    bool operator==(const IntersectionArray&) const = default;
};
// present iff all distance-partition counts are constant; input must be
// connected
std::optional<IntersectionArray> intersection_array(const Graph& g);

long long moore_bound(int k, int d); // 1 + k·Σ_{i<d}(k-1)^i
bool is_moore(const Graph& g);       // regular, |V| = bound(k, diam), girth 2·diam+1
bool moore_d2_feasible(int k);       // spectral feasibility of (k²+1, k, 0, 1), k ≥ 2

struct GeneralizedPolygon {
    int d = 0;      // diameter; girth is 2d
    int s = 0, t = 0; // side valencies minus one, s ≥ t
    bool thick = false;

    bool operator==(const GeneralizedPolygon&) const = default;
};
// input must be connected and bipartite; present iff girth = 2·diameter and
// each bipartition class has constant valency
std::optional<GeneralizedPolygon> generalized_polygon(const Graph& g);
bool feit_higman_admissible(int d, int s, int t);

} // namespace agt
