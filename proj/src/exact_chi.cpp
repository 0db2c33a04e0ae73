#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dynchroma/coloring.hpp"

namespace dynchroma {

namespace {

// Backtracking search for an r-dynamic coloring with palette 1..d.
// Vertices are visited in a static order (descending degree, then index);
// vertex assignments are pruned by properness, by the symmetry break
// c <= 1 + max color used so far, and by the reachability bound
// distinct + uncolored >= min(r, deg) at every neighbor.
class ChiSearch {
public:
    ChiSearch(const Graph& g, int r, std::uint64_t budget, std::uint64_t& nodes)
        : g_(g), r_(r), budget_(budget), nodes_(nodes), colors_(g.vertex_count(), 0) {
        order_.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) order_[v] = v;
        std::sort(order_.begin(), order_.end(), [&g](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
    }

    bool run(int d) {
        d_ = d;
        std::fill(colors_.begin(), colors_.end(), 0);
        max_used_ = 0;
        aborted_ = false;
        stamp_.assign(d + 1, 0);
        stamp_gen_ = 0;
        return place(0);
    }

    bool aborted() const { return aborted_; }
    const std::vector<int>& colors() const { return colors_; }

private:
    bool feasible(int u) {
        int required = std::min(r_, g_.degree(u));
        if (required == 0) return true;
        ++stamp_gen_;
        int distinct = 0, uncolored = 0;
        for (int w : g_.neighbors(u)) {
            int c = colors_[w];
            if (c == 0) {
                ++uncolored;
            } else if (stamp_[c] != stamp_gen_) {
                stamp_[c] = stamp_gen_;
                ++distinct;
            }
        }
        return distinct + uncolored >= required;
    }

    bool place(size_t p) {
        if (p == order_.size()) return true;
        int v = order_[p];
        int limit = std::min(d_, max_used_ + 1);
        for (int c = 1; c <= limit; ++c) {
            if (nodes_ >= budget_) {
                aborted_ = true;
                return false;
            }
            ++nodes_;
            bool clash = false;
            for (int u : g_.neighbors(v)) {
                if (colors_[u] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            colors_[v] = c;
            int old_max = max_used_;
            max_used_ = std::max(max_used_, c);
            bool viable = true;
            for (int u : g_.neighbors(v)) {
                if (!feasible(u)) {
                    viable = false;
                    break;
                }
            }
            if (viable && place(p + 1)) return true;
            colors_[v] = 0;
            max_used_ = old_max;
            if (aborted_) return false;
        }
        return false;
    }

    const Graph& g_;
    int r_;
    int d_ = 0;
    std::uint64_t budget_;
    std::uint64_t& nodes_;
    bool aborted_ = false;
    int max_used_ = 0;
    std::vector<int> order_;
    std::vector<int> colors_;
    std::vector<int> stamp_;
    int stamp_gen_ = 0;
};

}  // namespace

ChiResult exact_chi_r(const Graph& g, int r, int color_cap, std::uint64_t node_budget) {
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    ChiResult result;
    int n = g.vertex_count();
    if (n == 0) {
        result.status = ChiStatus::Exact;
        result.value = 0;
        result.lower_bound = 0;
        result.witness = Coloring{};
        return result;
    }
    int delta = g.max_degree();
    if (color_cap <= 0) color_cap = delta * delta + 1;
    if (node_budget == 0) node_budget = kDefaultNodeBudget;

    // A vertex and its min(r, deg) required neighbor colors are pairwise
    // distinct, so that many plus one colors are needed.
    int lb = g.edge_count() > 0 ? 2 : 1;
    for (int v = 0; v < n; ++v) lb = std::max(lb, std::min(r, g.degree(v)) + 1);

    std::uint64_t nodes = 0;
    ChiSearch search(g, r, node_budget, nodes);
    for (int d = lb; d <= color_cap; ++d) {
        result.lower_bound = d;
        bool found = search.run(d);
        result.nodes_used = nodes;
        if (found) {
            result.status = ChiStatus::Exact;
            result.value = d;
            result.witness = Coloring::from_colors(search.colors());
            return result;
        }
        if (search.aborted()) {
            result.status = ChiStatus::Unknown;
            return result;
        }
    }
    result.status = ChiStatus::LowerBoundOnly;
    result.lower_bound = color_cap + 1;
    return result;
}

ChiResult chi_two_distance(const Graph& g, std::uint64_t node_budget) {
    Graph sq = square(g);
    int cap = sq.vertex_count() == 0 ? 1 : sq.max_degree() + 1;
    return exact_chi_r(sq, 0, cap, node_budget);
}

}  // namespace dynchroma
