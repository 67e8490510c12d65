#pragma once
#include <optional>

#include "agt/graph.hpp"
#include "agt/permgroup.hpp"

namespace agt {

// Full automorphism group via equitable-partition refinement (seeded by
// degree/distance invariants) and individualization backtracking with orbit
// pruning by the automorphisms found so far.
PermGroup automorphism_group(const Graph& g);

// Witness bijection (mapping[v of g] = vertex of h) or definitive absence.
std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h);

struct SymmetryCertificate {
    BigInt aut_order;
    std::vector<Perm> generators;
    bool vertex_transitive = false;
    bool edge_transitive = false;
    bool arc_transitive = false;
    // Largest s with a single orbit on s-arcs, capped at the girth (cycles
    // are s-arc-transitive for every s); 0 when not arc-transitive.
    int max_s_arc_transitive = 0;
    std::optional<int> s_arc_regular; // s with sharply transitive s-arc action
    bool distance_transitive = false; // always false for disconnected input
    bool semisymmetric = false;
    int vertex_orbits = 0;
    int edge_orbits = 0;
    int arc_orbits = 0;
};

SymmetryCertificate transitivity(const Graph& g);

bool is_vertex_transitive(const Graph& g);
bool is_edge_transitive(const Graph& g);
bool is_arc_transitive(const Graph& g);
bool is_s_arc_transitive(const Graph& g, int s);
int max_s_arc_transitivity(const Graph& g);
bool is_s_arc_regular(const Graph& g, int s);
long long count_s_arcs(const Graph& g, int s);
bool is_distance_transitive(const Graph& g);
bool is_semisymmetric(const Graph& g);

struct Digraph {
    int n = 0;
    std::vector<std::vector<int>> out;
};

// Directed shunting graph on s-arcs (s = 0: the vertices themselves, with
// both orientations of every edge).
Digraph arc_digraph(const Graph& g, int s);
bool is_strongly_connected(const Digraph& d);

} // namespace agt
