#pragma once

#include <array>
#include <vector>

#include "agt/graph.hpp"

namespace agt {

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n); // n ≥ 3
Graph complete_bipartite(int m, int n);

Graph hypercube(int k);            // vertices = k-bit values, adjacent iff one bit apart
Graph johnson(int v, int k, int i); // k-subsets in colex order, adjacent iff |A∩B| = i
Graph odd_graph(int k);            // johnson(2k+1, k, 0)
Graph petersen();                  // odd_graph(2)
Graph paley(int q);                // q ≡ 1 (mod 4) prime power
Graph hamming(int d, int q);       // words of length d, adjacent iff one coordinate apart

Graph heawood();        // Levi graph of the Fano plane
Graph tutte_coxeter();  // Levi graph of the duad/syntheme quadrangle
Graph coxeter();        // induced subgraph of odd_graph(3) on the non-Fano triples
Graph hoffman_singleton();
Graph folkman();
Graph shrikhande();

// the colex-ordered k-subsets of 0..v-1 that index johnson() vertices
std::vector<std::vector<int>> colex_subsets(int v, int k);

// A heptad: seven triples of {0..6}, any two meeting in exactly one point,
// every point on exactly three triples. Stored sorted.
using Triple = std::array<int, 3>;
using Heptad = std::vector<Triple>;

struct HeptadOrbits {
    std::vector<Heptad> orbit1; // the alternating-group orbit containing the Fano heptad
    std::vector<Heptad> orbit2;
};
HeptadOrbits heptads();

Heptad fano_heptad(); // {012, 034, 056, 135, 146, 236, 245}

} // namespace agt
