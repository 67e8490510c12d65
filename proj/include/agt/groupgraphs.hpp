#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agt/graph.hpp"
#include "agt/perm.hpp"

namespace agt {

// Finite group as a multiplication table over element indices 0..n-1.
// Construction validates the axioms (full associativity sweep at small order,
// sampled above that).
struct FiniteGroup {
    int n = 0;
    std::vector<std::vector<int>> mul; // mul[a][b] = a·b
    int id = 0;
    std::vector<int> inv;

    int order() const { return n; }
};

FiniteGroup group_from_table(const std::vector<std::vector<int>>& table);
// closure of permutation generators (composition left-to-right), elements in
// lex order of images — the identity always lands at index 0
FiniteGroup group_from_perms(int degree, const std::vector<Perm>& gens);
FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b); // (x,y) ↦ x·|B|+y

// sorted element closure of a generating subset
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h);

// vertices = elements; g ~ h iff h·g⁻¹ ∈ C; requires id ∉ C and C = C⁻¹
Graph cayley_graph(const FiniteGroup& g, const std::vector<int>& connection);

// Sabidussi reconstruction: search Aut(G) for a regular subgroup; on success
// the returned (group, connection set) rebuilds the input graph under the
// identity vertex map.
std::optional<std::pair<FiniteGroup, std::vector<int>>> is_cayley(const Graph& g);

// bipartite graph on the right-coset families Hg and Kg, adjacent iff the
// cosets intersect
Graph coset_graph(const FiniteGroup& g, const std::vector<int>& h, const std::vector<int>& k);

// vertices = left cosets gH; gH ~ g'H iff g⁻¹g' ∈ S; requires S = HSH = S⁻¹,
// S ∩ H = ∅
Graph double_coset_graph(const FiniteGroup& g, const std::vector<int>& h,
                         const std::vector<int>& s);

// a graph whose automorphism group is (isomorphic to) the given group, |G| ≥ 2
Graph frucht_graph(const FiniteGroup& g);

// text format: first line n, then n rows of n element indices
FiniteGroup parse_cayley_table(const std::string& text);
std::string format_cayley_table(const FiniteGroup& g);

} // namespace agt
