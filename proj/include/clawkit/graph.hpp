#pragma once
// Core graph type: simple undirected graphs on vertices 0..n-1 with bitset
// adjacency rows, graph6 round-trip I/O, and the basic structural queries the
// rest of the library is built on (connectivity, vertex connectivity,
// closed-twin classes, complete-multipartite detection).

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clawkit/bits.hpp"

namespace clawkit {

struct Graph {
    int n = 0;
    std::vector<Bits> adj;  // adj[v] never contains v itself

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_, Bits(n_)) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
        Graph g(n);
        for (auto [u, v] : es) g.add_edge(u, v);
        return g;
    }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("add_edge: bad endpoints");
        adj[u].set(v);
        adj[v].set(u);
    }
    bool has_edge(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return adj[v].count(); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n; ++v) twice += degree(v);
        return twice / 2;
    }
    // Edges as (u, v) with u < v, ascending.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v = adj[u].next(u + 1); v >= 0; v = adj[u].next(v + 1))
                out.emplace_back(u, v);
        return out;
    }
    // Closed neighbourhood N[v] as a bitset.
    Bits closed_nbhd(int v) const {
        Bits b = adj[v];
        b.set(v);
        return b;
    }

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

// ---- graph6 ----------------------------------------------------------------

// Error in a graph6 line; offset is the 0-based byte position of the offender
// (or the position where more input was expected).
struct Graph6Error : std::runtime_error {
    std::size_t offset;
    std::string detail;  // message without the byte suffix
    Graph6Error(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"),
          offset(off),
          detail(msg) {}
};

// Parses one graph6 line (an optional ">>graph6<<" prefix is accepted).
Graph parse_graph6(const std::string& line);
// Canonical-width graph6 encoding of g (no trailing newline).
std::string write_graph6(const Graph& g);

// ---- basic operations -------------------------------------------------------

// Subgraph induced by the given vertices, relabeled order-isomorphically
// (vertices are sorted ascending; duplicates/out-of-range throw).
Graph induced(const Graph& g, std::vector<int> vertices);

Graph complement(const Graph& g);

// Connectivity of the one-vertex graph is true; n = 0 throws.
bool is_connected(const Graph& g);

// Vertex connectivity via vertex-disjoint paths (max-flow with unit vertex
// capacities). kappa(K_n) = n-1, kappa(K_1) = 0, disconnected -> 0.
int vertex_connectivity(const Graph& g);

// Partition of V into maximal classes of mutually closed twins
// (N[u] == N[v]). Classes are ordered by smallest member; members ascending.
// Any two members of a class are necessarily adjacent.
std::vector<std::vector<int>> closed_twin_classes(const Graph& g);

// Quotient over the given twin classes: one vertex per class, adjacent iff
// their members are adjacent in g (all-or-nothing between classes).
Graph twin_quotient(const Graph& g, const std::vector<std::vector<int>>& classes);

// If g is complete multipartite, its partite classes (each a maximal
// independent set), ordered by smallest member; otherwise nullopt.
std::optional<std::vector<std::vector<int>>> complete_multipartite_parts(const Graph& g);

}  // namespace clawkit
