#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ehrgraph {

// Simple undirected graph on vertices 1..vertex_count. Edges are stored as
// (lo, hi) pairs with lo < hi, sorted lexicographically and deduplicated;
// that fixed order is also the column order of the incidence matrix.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    // Validates labels, rejects loops; sorts and deduplicates.
    static Graph from_edges(int vertex_count, std::vector<std::pair<int, int>> edges);

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const;
    std::vector<int> isolated_vertices() const;
    bool is_connected() const;
};

// Path on vertices 1..n, edges {i, i+1}.
Graph linear_graph(int n);

// Cycle on vertices 1..n (n >= 3).
Graph cycle_graph(int n);

// Complete bipartite graph with parts {1..a} and {a+1..a+b}.
Graph complete_bipartite(int a, int b);

enum class Side { A, B };

struct Bipartition {
    std::vector<Side> side_of; // index v-1 holds the side of vertex v

    Side side(int v) const { return side_of[static_cast<size_t>(v) - 1]; }
};

// Breadth-first 2-coloring, component roots (smallest labels) colored A.
// Absent iff the graph contains an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

// d x m 0/1 matrix, b[i][j] = 1 iff vertex i+1 is an endpoint of edge j.
// Every column sums to 2.
std::vector<std::vector<int>> incidence_matrix(const Graph& g);

// r-uniform hypergraph on vertices 1..vertex_count; each edge is a sorted
// list of r distinct labels, edge list sorted lexicographically.
struct Hypergraph {
    int vertex_count = 0;
    int uniformity = 2;
    std::vector<std::vector<int>> edges;

    static Hypergraph from_edges(int vertex_count, int uniformity,
                                 std::vector<std::vector<int>> edges);

    int edge_count() const { return static_cast<int>(edges.size()); }
    std::vector<int> isolated_vertices() const;
};

// d x m 0/1 matrix; every column sums to the uniformity r.
std::vector<std::vector<int>> incidence_matrix(const Hypergraph& h);

// Edge-list text format: first line "d", then one "i j" line per edge
// (1-based labels). Throws std::runtime_error with a line number on
// malformed input.
Graph parse_graph(std::istream& in);
Graph load_graph(const std::string& path);

// Hypergraph text format: first line "d r", then r labels per line.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph load_hypergraph(const std::string& path);

} // namespace ehrgraph
