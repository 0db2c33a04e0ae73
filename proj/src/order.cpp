#include "dynchroma/order.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>

namespace dynchroma {

LinearOrder LinearOrder::from_sequence(std::vector<int> sequence) {
    int n = static_cast<int>(sequence.size());
    LinearOrder order;
    order.position_.assign(n, -1);
    for (int r = 0; r < n; ++r) {
        int v = sequence[r];
        if (v < 0 || v >= n) {
            throw std::invalid_argument("order contains vertex " + std::to_string(v) +
                                        ", outside 0.." + std::to_string(n - 1));
        }
        if (order.position_[v] >= 0) {
            throw std::invalid_argument("order repeats vertex " + std::to_string(v));
        }
        order.position_[v] = r;
    }
    order.sequence_ = std::move(sequence);
    return order;
}

LinearOrder LinearOrder::identity(int n) {
    std::vector<int> seq(n);
    for (int v = 0; v < n; ++v) seq[v] = v;
    return from_sequence(std::move(seq));
}

namespace {

void check_fit(const Graph& g, const LinearOrder& order, int t) {
    if (order.size() != g.vertex_count()) {
        throw std::invalid_argument("order covers " + std::to_string(order.size()) +
                                    " vertices, graph has " + std::to_string(g.vertex_count()));
    }
    if (t < 0) throw std::invalid_argument("reach radius must be nonnegative");
}

// Truncated BFS from v: expands only through vertices the `expandable`
// predicate admits, collects everything else it touches.  Walks and simple
// paths coincide here because any walk through expandable vertices
// shortcuts to a path through them.
template <typename Expandable>
int collect_reach(const Graph& g, int v, int t, const Expandable& expandable,
                  std::vector<int>& members, std::vector<int>& frontier,
                  std::vector<int>& next, std::vector<char>& visited) {
    members.clear();
    frontier.clear();
    visited.assign(g.vertex_count(), 0);
    visited[v] = 1;
    members.push_back(v);
    frontier.push_back(v);
    for (int d = 0; d < t && !frontier.empty(); ++d) {
        next.clear();
        for (int u : frontier) {
            for (int w : g.neighbors(u)) {
                if (visited[w]) continue;
                visited[w] = 1;
                if (expandable(w)) {
                    next.push_back(w);
                } else {
                    members.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
    return static_cast<int>(members.size());
}

}  // namespace

ReachSet reach_set(const Graph& g, const LinearOrder& order, int v, int t) {
    check_fit(g, order, t);
    if (v < 0 || v >= g.vertex_count()) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }
    int rv = order.rank(v);
    std::vector<int> members, frontier, next;
    std::vector<char> visited;
    collect_reach(
        g, v, t, [&](int w) { return order.rank(w) > rv; }, members, frontier, next, visited);
    std::sort(members.begin(), members.end());
    return ReachSet{v, t, std::move(members)};
}

int order_width(const Graph& g, const LinearOrder& order, int t) {
    check_fit(g, order, t);
    int width = 0;
    std::vector<int> members, frontier, next;
    std::vector<char> visited;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int rv = order.rank(v);
        width = std::max(width, collect_reach(
                                    g, v, t, [&](int w) { return order.rank(w) > rv; }, members,
                                    frontier, next, visited));
    }
    return width;
}

const char* to_string(ColMethod m) {
    switch (m) {
        case ColMethod::ExactDp: return "exact-dp";
        case ColMethod::ExactBruteforce: return "exact-bruteforce";
        case ColMethod::UpperBoundOnly: return "upper-bound-only";
    }
    return "?";
}

ColNumberResult upper_bound_result(const Graph& g, LinearOrder order, int t) {
    int width = order_width(g, order, t);
    return ColNumberResult{t, width, std::move(order), ColMethod::UpperBoundOnly};
}

LinearOrder reverse_peo_order(const KTree& kt) {
    validate(kt);
    return LinearOrder::from_sequence(kt.construction_order);
}

LinearOrder product_order(const LayeredProduct& lp, const LinearOrder& h_order) {
    if (h_order.size() != lp.h().vertex_count()) {
        throw std::invalid_argument("base order does not fit the base graph");
    }
    int n = lp.graph.vertex_count();
    std::vector<int> seq(n);
    for (int v = 0; v < n; ++v) seq[v] = v;
    std::sort(seq.begin(), seq.end(), [&](int a, int b) {
        int ra = h_order.rank(lp.projection[a]);
        int rb = h_order.rank(lp.projection[b]);
        if (ra != rb) return ra < rb;
        return lp.layer[a] < lp.layer[b];
    });
    return LinearOrder::from_sequence(std::move(seq));
}

LinearOrder subdivision_order(const SubdividedGraph& sg) {
    std::vector<int> seq;
    seq.reserve(sg.graph.vertex_count());
    for (int v = 0; v < sg.original_count; ++v) seq.push_back(v);
    for (int v = sg.original_count; v < sg.graph.vertex_count(); ++v) seq.push_back(v);
    return LinearOrder::from_sequence(std::move(seq));
}

LinearOrder min_backreach_order(const Graph& g, int t) {
    if (t < 0) throw std::invalid_argument("reach radius must be nonnegative");
    int n = g.vertex_count();
    std::vector<char> in_suffix(n, 0);
    std::vector<int> seq(n);
    std::vector<int> members, frontier, next;
    std::vector<char> visited;
    for (int pos = n - 1; pos >= 0; --pos) {
        int best = -1, best_count = INT_MAX;
        for (int v = 0; v < n; ++v) {
            if (in_suffix[v]) continue;
            int count = collect_reach(
                g, v, t, [&](int w) { return in_suffix[w] != 0; }, members, frontier, next,
                visited);
            if (count < best_count) {
                best_count = count;
                best = v;
            }
        }
        seq[pos] = best;
        in_suffix[best] = 1;
    }
    return LinearOrder::from_sequence(std::move(seq));
}

}  // namespace dynchroma
