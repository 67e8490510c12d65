#pragma once
#include "agt/graph.hpp"

namespace agt {

// BFS-per-source distance matrices, -1 for unreachable pairs.
// The parallel variants split rows across OpenMP threads; outputs are
// identical to the serial ones (each row is computed independently).
std::vector<std::vector<int>> all_pairs_distances_serial(const Graph& g);
std::vector<std::vector<int>> all_pairs_distances_parallel(const Graph& g);

// counts[u][v] = |N(u) ∩ N(v)|.
std::vector<std::vector<int>> common_neighbor_counts_serial(const Graph& g);
std::vector<std::vector<int>> common_neighbor_counts_parallel(const Graph& g);

} // namespace agt
