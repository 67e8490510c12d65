#include <cctype>
#include <sstream>

#include "agt/errors.hpp"
#include "agt/graph.hpp"

namespace agt {

// graph6: N(n) then the upper triangle, column by column, packed into 6-bit
// groups, every byte offset by 63.
static void append_n(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for short graph6 form");
    }
}

std::string graph6_encode(const Graph& g) {
    std::string out;
    append_n(out, g.n());
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(const std::string& bytes) {
    std::string s = bytes;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
    if (s.empty()) throw parse_error("empty graph6 input");
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw parse_error("truncated graph6 header");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw parse_error("byte out of graph6 range");
        return c - 63;
    };
    long long n;
    int c0 = next();
    if (c0 < 63) {
        n = c0;
    } else {
        int a = next(), b = next(), c = next();
        n = (static_cast<long long>(a) << 12) | (b << 6) | c;
        if (n > 258047) throw parse_error("unsupported graph6 size form");
    }
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != nbytes)
        throw parse_error("graph6 payload length mismatch");
    Graph g(static_cast<int>(n));
    int acc = 0, have = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (have == 0) {
                acc = next();
                have = 6;
            }
            if (acc & (1 << --have)) g.add_edge(i, j);
        }
    // trailing pad bits must be zero
    if (have > 0 && (acc & ((1 << have) - 1)) != 0) throw parse_error("nonzero graph6 padding");
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n, m;
    if (!(in >> n >> m)) throw parse_error("edge list header must be \"n m\"");
    if (n < 0 || m < 0) throw parse_error("negative counts in edge list header");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw parse_error("edge list shorter than its header claims");
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw parse_error("bad edge in edge list");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    long long extra;
    if (in >> extra) throw parse_error("trailing data after edge list");
    return g;
}

Graph read_graph_auto(const std::string& content) {
    size_t i = 0;
    while (i < content.size() && std::isspace(static_cast<unsigned char>(content[i]))) ++i;
    if (i == content.size()) throw parse_error("empty graph input");
    // graph6 bytes live in 63..126, so a leading digit means an edge list
    if (std::isdigit(static_cast<unsigned char>(content[i]))) return parse_edge_list(content);
    std::string line = content.substr(i);
    size_t eol = line.find('\n');
    if (eol != std::string::npos) line.resize(eol);
    return graph6_decode(line);
}

} // namespace agt
