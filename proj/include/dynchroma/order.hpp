#pragma once

#include <vector>

#include "dynchroma/families.hpp"
#include "dynchroma/graph.hpp"

namespace dynchroma {

// A permutation of the vertex set: rank per vertex plus its inverse.
class LinearOrder {
public:
    LinearOrder() = default;

    // Validates that `sequence` is a permutation of 0..n-1.
    static LinearOrder from_sequence(std::vector<int> sequence);
    static LinearOrder identity(int n);

    int size() const { return static_cast<int>(sequence_.size()); }
    int rank(int v) const { return position_[v]; }
    int vertex_at(int r) const { return sequence_[r]; }
    const std::vector<int>& sequence() const { return sequence_; }
    const std::vector<int>& position() const { return position_; }

    bool operator==(const LinearOrder&) const = default;

private:
    std::vector<int> position_;
    std::vector<int> sequence_;
};

struct ReachSet {
    int center = -1;
    int radius = 0;
    std::vector<int> members;  // sorted ascending, always contains center
};

// Vertices u with rank(u) <= rank(v) joined to v by a path of length <= t
// whose inner vertices all have rank > rank(v).
ReachSet reach_set(const Graph& g, const LinearOrder& order, int v, int t);

// max over v of |reach_set(g, order, v, t)|; certifies col_t(g) <= result.
int order_width(const Graph& g, const LinearOrder& order, int t);

enum class ColMethod { ExactDp, ExactBruteforce, UpperBoundOnly };
const char* to_string(ColMethod m);

struct ColNumberResult {
    int t = 0;
    int value = 0;
    LinearOrder witness;
    ColMethod method = ColMethod::UpperBoundOnly;
};

inline constexpr int kDefaultDpCap = 20;
inline constexpr int kDefaultBruteCap = 9;

// Exact strong t-coloring number via dynamic programming over suffix sets.
// Throws CapExceeded when the graph has more than `cap` vertices
// (cap <= 0 selects the default).
ColNumberResult exact_col_t(const Graph& g, int t, int cap = 0);

// Exact value by minimizing order_width over all n! vertex orders.
ColNumberResult exact_col_t_bruteforce(const Graph& g, int t, int cap = 0);

// Wraps an arbitrary order as an upper-bound-only result with its width.
ColNumberResult upper_bound_result(const Graph& g, LinearOrder order, int t);

// The recorded construction order of a k-tree; left neighborhoods are
// cliques of size <= k, so every t-reach width is at most k+1.
LinearOrder reverse_peo_order(const KTree& kt);

// Vertices grouped by h_order rank of their projection, layers ascending
// within a group; width_t <= (2t+1)(k+1) when h_order is the k-tree's
// reverse construction order.
LinearOrder product_order(const LayeredProduct& lp, const LinearOrder& h_order);

// All original vertices (ascending index) before all subdivision vertices
// (ascending index); gives 2-reach width <= 3 whenever every edge was
// subdivided at least twice.
LinearOrder subdivision_order(const SubdividedGraph& sg);

// Builds the order right to left, greedily picking the vertex whose
// backward t-reach against the current suffix is smallest (ties by index).
LinearOrder min_backreach_order(const Graph& g, int t);

}  // namespace dynchroma
