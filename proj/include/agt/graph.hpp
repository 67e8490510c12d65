#pragma once
#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace agt {

using Bitset = boost::dynamic_bitset<>;
using Edge = std::pair<int, int>; // normalized (min,max)

// Simple undirected graph on dense vertices 0..n-1, one bit-row per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n, Bitset(n)) {}

    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    void add_edge(int u, int v);
    const Bitset& row(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].count()); }
    long long edge_count() const;
    std::vector<int> neighbors(int v) const;
    std::vector<Edge> edges() const; // lexicographic on (min,max)
    std::optional<int> regular_degree() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<Bitset> adj_;
};

// Structural operators.
Graph complement(const Graph& g);
Graph line_graph(const Graph& g); // vertex order = sorted edge list of g
Graph cartesian_product(const Graph& g, const Graph& h); // (a,b) -> a*|H|+b
Graph k_fold_subdivision(const Graph& g, int k); // every edge becomes a k-path
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);
Graph delete_vertex(const Graph& g, int v);
Graph relabel(const Graph& g, const std::vector<int>& image); // vertex v -> image[v]

// All-pairs hop counts; pairs in different components are unreachable.
class DistanceTable {
public:
    DistanceTable() = default;
    explicit DistanceTable(std::vector<std::vector<int>> d);
    int n() const { return static_cast<int>(d_.size()); }
    bool reachable(int u, int v) const { return d_[u][v] >= 0; }
    std::optional<int> operator()(int u, int v) const;
    int at(int u, int v) const; // requires reachable(u,v)
    // Raw matrix with -1 for unreachable; convenience for tight loops.
    const std::vector<std::vector<int>>& raw() const { return d_; }

private:
    std::vector<std::vector<int>> d_;
};

DistanceTable metrics(const Graph& g);
std::optional<int> girth(const Graph& g);    // nullopt = acyclic
std::optional<int> diameter(const Graph& g); // nullopt = disconnected
bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

// graph6 codec (bit-exact per the published format).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& bytes);

// Plain text edge list: "n m" header then one "u v" line per edge.
std::string format_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

// Autodetect edge list (leading digit) vs graph6.
Graph read_graph_auto(const std::string& content);

} // namespace agt
