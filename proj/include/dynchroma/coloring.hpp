#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dynchroma/graph.hpp"
#include "dynchroma/order.hpp"

namespace dynchroma {

// Total coloring with positive color indices; palette is the largest
// color in use.
struct Coloring {
    std::vector<int> colors;
    int palette = 0;

    // Validates totality and positivity, computes the palette.
    static Coloring from_colors(std::vector<int> colors);
    int color(int v) const { return colors[v]; }
};

struct ProperViolation {
    int u = 0, v = 0;  // monochromatic edge
};

struct DynamicViolation {
    int vertex = 0;
    std::vector<int> seen_colors;  // distinct neighborhood colors, sorted
    int required = 0;              // min(r, deg)
};

struct VerificationReport {
    bool ok = true;
    std::vector<ProperViolation> proper_violations;
    std::vector<DynamicViolation> dynamic_violations;
};

// Checks properness and that every vertex sees at least min(r, deg(v))
// distinct colors in its neighborhood.  r = 0 degenerates to a plain
// proper-coloring check.
VerificationReport verify_r_dynamic(const Graph& g, const Coloring& c, int r);

struct GreedyStep {
    int vertex = 0;
    std::vector<int> forbidden_strongly_proper;  // colors on the 2-reach
    std::vector<int> forbidden_neighbors;        // colors pinned by short neighbors
    int chosen = 0;
};

struct GreedyTrace {
    std::vector<GreedyStep> steps;  // in processing order
};

// Colors vertices along `order` with the smallest color that is neither on
// the vertex's 2-reach nor pinned by an earlier neighbor still short of r
// distinct colors.  Always yields a verified r-dynamic coloring; the
// palette is at most (w-1)r+1 for r >= 1 (and at most w for r = 0), where
// w is the 2-reach width of the order.
std::pair<Coloring, GreedyTrace> greedy_r_dynamic(const Graph& g, const LinearOrder& order, int r);

// (k-1)*r + 1; the palette guarantee attached to 2-reach width k,
// meaningful for r >= 1.
int theorem_bound(int k, int r);

enum class ChiStatus { Exact, Unknown, LowerBoundOnly };
const char* to_string(ChiStatus s);

struct ChiResult {
    ChiStatus status = ChiStatus::Unknown;
    int value = 0;       // valid when status == Exact
    int lower_bound = 1; // always a valid lower bound on chi_r
    std::uint64_t nodes_used = 0;
    std::optional<Coloring> witness;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

// Smallest palette admitting an r-dynamic coloring, by iterative deepening
// over the palette size with backtracking search.  color_cap <= 0 selects
// max_degree^2 + 1, which always suffices; node_budget 0 selects the
// default.  Budget exhaustion yields Unknown, a too-small cap yields
// LowerBoundOnly; both keep the strongest proven lower bound.
ChiResult exact_chi_r(const Graph& g, int r, int color_cap = 0, std::uint64_t node_budget = 0);

// Exact chromatic number of square(g); equals chi_r(g) for all r >= max degree.
ChiResult chi_two_distance(const Graph& g, std::uint64_t node_budget = 0);

}  // namespace dynchroma
