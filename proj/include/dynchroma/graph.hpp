#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dynchroma {

// Simple undirected graph on vertices 0..n-1.  Immutable once built;
// adjacency lists are kept sorted, no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    // Validates the edge list: self-loops and out-of-range endpoints are
    // rejected (std::invalid_argument naming the pair), duplicates collapse.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    int max_degree() const;

    // Edges as (u,v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// DIMACS .col: "p edge <n> <m>" header, "e <u> <v>" lines (1-indexed),
// "c" comment lines ignored.  Parse errors carry the line number.
Graph parse_dimacs(const std::string& text);
std::string write_dimacs(const Graph& g);

// One "u v" pair per line, nonnegative integer vertex names, n inferred as
// max index + 1.  Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(const std::string& text);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// Appends `count` vertices, each adjacent to every other vertex
// (including each other).
Graph add_universal(const Graph& g, int count);

// uv is an edge of the result iff 1 <= dist_g(u,v) <= 2.
Graph square(const Graph& g);

}  // namespace dynchroma
