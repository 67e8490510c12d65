#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "agt/graph.hpp"

namespace agt {

using Rational = boost::rational<long long>;

// Points 0..v-1 and a list of blocks (each sorted ascending, no duplicates).
struct IncidenceStructure {
    int v = 0;
    std::vector<std::vector<int>> blocks;

    bool operator==(const IncidenceStructure&) const = default;
};

struct DesignParams {
    int t = 0, v = 0, k = 0;
    long long lambda = 0; // λ_t
    long long b = 0;      // block count = λ_0
    long long r = 0;      // replication number = λ_1

    bool operator==(const DesignParams&) const = default;
};

// bipartite point/block incidence graph: points 0..v-1, then blocks
Graph levi_graph(const IncidenceStructure& s);

// present iff block size is uniform and every t-subset of points lies in the
// same (positive) number of blocks; counting is exhaustive
std::optional<DesignParams> is_t_design(const IncidenceStructure& s, int t);

// λ_s = λ_t·C(v-s, t-s)/C(k-s, t-s), 0 ≤ s ≤ t
Rational lambda_s(const DesignParams& p, int s);

// the chain r^(p) = Π_{j=p}^{t-1} (v-j)/(k-j) for p = 0..t; values[0] = block
// count, values[t] = 1; integrality of each term is a necessary existence
// condition for S(t,k,v)
struct SteinerChain {
    std::vector<Rational> values;
    std::vector<bool> integral;
    bool all_integral = true;
};
SteinerChain steiner_counts(int t, int k, int v);

// blocks through x with x removed: S(t,k,v) -> S(t-1,k-1,v-1); the input must
// verify as a Steiner system with t ≥ 3 and the result is re-verified
IncidenceStructure contraction(const IncidenceStructure& s, int x);

IncidenceStructure fano_plane();
IncidenceStructure pg2(int q);          // projective plane of order q, q ≤ 16
IncidenceStructure w_quadrangle(int q); // symplectic generalized quadrangle, q ≤ 5
IncidenceStructure duad_syntheme();     // 15 duads vs 15 synthemes of a 6-set
IncidenceStructure gq22_from_k6();      // same structure read as GQ(2,2): edges vs 1-factors of K6

IncidenceStructure dual_structure(const IncidenceStructure& s);
bool is_symmetric_design(const IncidenceStructure& s); // 2-design with b = v

// text format: "v b" header, then one block per line as point ids
std::string format_incidence(const IncidenceStructure& s);
IncidenceStructure parse_incidence(const std::string& text);

long long binomial(int n, int k);

} // namespace agt
