#pragma once

#include <atomic>
#include <optional>
#include <vector>

#include "agt/graph.hpp"

namespace agt {

// All searches are exact and return the lexicographically least witness under
// the vertex order. The long-running ones poll an optional cancellation flag
// and throw search_cancelled when it flips.

struct HomWitness {
    std::vector<int> mapping; // mapping[v of G] = vertex of H
};

// adjacency-preserving map G -> H; bounds |V(G)| ≤ 60, |V(H)| ≤ 12
std::optional<HomWitness> find_homomorphism(const Graph& g, const Graph& h,
                                            const std::atomic<bool>* cancel = nullptr);

// minimal retract; |V| ≤ 40
Graph core(const Graph& g, const std::atomic<bool>* cancel = nullptr);
bool is_core(const Graph& g, const std::atomic<bool>* cancel = nullptr);

int independence_number(const Graph& g); // n ≤ 60
int clique_number(const Graph& g);
int chromatic_number(const Graph& g);
std::vector<std::vector<int>> max_independent_sets(const Graph& g);

// n ≤ 64; cycle as a vertex sequence of length n (closing edge implicit)
std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g,
                                                  const std::atomic<bool>* cancel = nullptr);
std::optional<std::vector<int>> hamiltonian_path(const Graph& g,
                                                 const std::atomic<bool>* cancel = nullptr);

// a cycle of length ≥ target, or definitive absence; n ≤ 40
std::optional<std::vector<int>> long_cycle_at_least(const Graph& g, int target,
                                                    const std::atomic<bool>* cancel = nullptr);

std::vector<Edge> max_matching(const Graph& g);

int edge_connectivity(const Graph& g);   // connected input
int vertex_connectivity(const Graph& g); // connected input; K_n -> n-1

} // namespace agt
