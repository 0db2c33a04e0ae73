#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "dynchroma/graph.hpp"
#include "dynchroma/order.hpp"

// Deliberately naive second implementations used to cross-check the library.
// The reach oracle enumerates simple paths by DFS, the coloring-number
// oracles enumerate permutations and color assignments outright.
namespace oracle {

namespace detail {

inline void reach_dfs(const dynchroma::Graph& g, const std::vector<int>& rank, int v, int budget,
                      int cur, std::vector<char>& on_path, std::vector<char>& hit) {
    for (int w : g.neighbors(cur)) {
        if (on_path[w]) continue;
        if (rank[w] <= rank[v]) {
            hit[w] = 1;
            continue;
        }
        if (budget > 1) {
            on_path[w] = 1;
            reach_dfs(g, rank, v, budget - 1, w, on_path, hit);
            on_path[w] = 0;
        }
    }
}

}  // namespace detail

inline std::vector<int> reach(const dynchroma::Graph& g, const dynchroma::LinearOrder& order,
                              int v, int t) {
    std::vector<char> on_path(g.vertex_count(), 0), hit(g.vertex_count(), 0);
    hit[v] = 1;
    if (t >= 1) {
        on_path[v] = 1;
        detail::reach_dfs(g, order.position(), v, t, v, on_path, hit);
    }
    std::vector<int> out;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (hit[u]) out.push_back(u);
    }
    return out;
}

inline int width(const dynchroma::Graph& g, const dynchroma::LinearOrder& order, int t) {
    int w = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        w = std::max(w, static_cast<int>(reach(g, order, v, t).size()));
    }
    return w;
}

inline int col_t(const dynchroma::Graph& g, int t) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    int best = n;
    do {
        best = std::min(best, width(g, dynchroma::LinearOrder::from_sequence(perm), t));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool valid_r_dynamic(const dynchroma::Graph& g, const std::vector<int>& colors, int r) {
    for (auto [u, v] : g.edges()) {
        if (colors[u] == colors[v]) return false;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::set<int> seen;
        for (int u : g.neighbors(v)) seen.insert(colors[u]);
        if (static_cast<int>(seen.size()) < std::min(r, g.degree(v))) return false;
    }
    return true;
}

// Assigning all-distinct colors is always r-dynamic, so chi_r <= n and the
// odometer over d^n assignments terminates for d = n at the latest.
inline int chi_r(const dynchroma::Graph& g, int r) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    for (int d = 1; d <= n; ++d) {
        std::vector<int> colors(n, 1);
        while (true) {
            if (valid_r_dynamic(g, colors, r)) return d;
            int i = 0;
            while (i < n && colors[i] == d) colors[i++] = 1;
            if (i == n) break;
            ++colors[i];
        }
    }
    return n;
}

}  // namespace oracle
