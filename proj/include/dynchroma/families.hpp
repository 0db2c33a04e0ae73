#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "dynchroma/graph.hpp"

namespace dynchroma {

// Result of subdividing every edge of a source graph.  Vertices
// 0..original_count-1 are the source vertices; subdivision vertices follow,
// grouped by source edge in lexicographic endpoint order.
struct SubdividedGraph {
    Graph graph;
    int original_count = 0;
    // parent_edge[i] is the source edge carrying vertex original_count + i.
    std::vector<std::pair<int, int>> parent_edge;

    bool is_original(int v) const { return v < original_count; }
    std::pair<int, int> parent_of(int v) const { return parent_edge[v - original_count]; }
};

// Replaces each edge by a path with `times` interior vertices (times >= 1).
SubdividedGraph subdivide(const Graph& g, int times);

// Recovers the source edge set by contracting the subdivision paths,
// sorted lexicographically.
std::vector<std::pair<int, int>> contracted_edges(const SubdividedGraph& sg);

// Throws std::invalid_argument when the structure does not describe a
// consistent subdivision of some graph.
void validate(const SubdividedGraph& sg);

// A graph built from a (k+1)-clique by repeatedly attaching a new vertex to
// a k-clique, together with the construction order that witnesses this.
struct KTree {
    Graph graph;
    int k = 0;
    std::vector<int> construction_order;
};

// Uniform-ish random k-tree: each new vertex attaches to a k-clique found by
// sampling a placed vertex v and a random k-subset of {v} u N(v), retrying
// until the subset is a clique.  Deterministic for a fixed seed.
KTree random_k_tree(int k, int n, std::uint64_t seed);

void validate(const KTree& kt);

// A subgraph of (k-tree) x path with per-vertex layer (1..m) and projection
// into the base graph.
struct LayeredProduct {
    Graph graph;
    KTree base;
    std::vector<int> layer;
    std::vector<int> projection;

    const Graph& h() const { return base.graph; }
};

using KeepPredicate = std::function<bool(int h_vertex, int layer)>;

// Full strong product of the k-tree's graph with a path on `layers` vertices,
// or the induced subgraph on the vertices accepted by `keep`.
LayeredProduct strong_product_with_path(const KTree& h, int layers);
LayeredProduct strong_product_with_path(const KTree& h, int layers, const KeepPredicate& keep);

void validate(const LayeredProduct& lp);

}  // namespace dynchroma
