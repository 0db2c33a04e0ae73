#include "dynchroma/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dynchroma {

namespace {

void sort_unique(std::vector<int>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

Coloring Coloring::from_colors(std::vector<int> colors) {
    Coloring c;
    for (size_t v = 0; v < colors.size(); ++v) {
        if (colors[v] < 1) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " has color " +
                                        std::to_string(colors[v]) + ", colors start at 1");
        }
        c.palette = std::max(c.palette, colors[v]);
    }
    c.colors = std::move(colors);
    return c;
}

VerificationReport verify_r_dynamic(const Graph& g, const Coloring& c, int r) {
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    if (static_cast<int>(c.colors.size()) != g.vertex_count()) {
        throw std::invalid_argument("coloring covers " + std::to_string(c.colors.size()) +
                                    " vertices, graph has " + std::to_string(g.vertex_count()));
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (c.colors[v] < 1) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " is uncolored");
        }
    }
    VerificationReport report;
    for (auto [u, v] : g.edges()) {
        if (c.colors[u] == c.colors[v]) report.proper_violations.push_back({u, v});
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> seen;
        seen.reserve(g.degree(v));
        for (int u : g.neighbors(v)) seen.push_back(c.colors[u]);
        sort_unique(seen);
        int required = std::min(r, g.degree(v));
        if (static_cast<int>(seen.size()) < required) {
            report.dynamic_violations.push_back({v, std::move(seen), required});
        }
    }
    report.ok = report.proper_violations.empty() && report.dynamic_violations.empty();
    return report;
}

// Two forbidden sets per vertex: colors on its 2-reach (keeps the coloring
// strongly proper), and for each earlier neighbor u that still sees at most
// r-1 distinct colors, the colors u already sees (so the new color extends
// u's count).  Earlier neighbors of any v lie pairwise in each other's
// 2-reach via v, so strong properness hands every vertex pairwise distinct
// colors on its earlier neighbors; together the two rules make the final
// coloring r-dynamic with no repair pass.
std::pair<Coloring, GreedyTrace> greedy_r_dynamic(const Graph& g, const LinearOrder& order,
                                                  int r) {
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    if (order.size() != g.vertex_count()) {
        throw std::invalid_argument("order covers " + std::to_string(order.size()) +
                                    " vertices, graph has " + std::to_string(g.vertex_count()));
    }
    int n = g.vertex_count();
    std::vector<int> colors(n, 0);
    GreedyTrace trace;
    trace.steps.reserve(n);
    std::vector<char> forbidden(n + 2, 0);
    for (int i = 0; i < n; ++i) {
        int v = order.vertex_at(i);
        GreedyStep step;
        step.vertex = v;
        for (int u : reach_set(g, order, v, 2).members) {
            if (u != v) step.forbidden_strongly_proper.push_back(colors[u]);
        }
        sort_unique(step.forbidden_strongly_proper);
        if (r >= 1) {
            for (int u : g.neighbors(v)) {
                if (order.rank(u) >= i) continue;
                std::vector<int> seen_by_u;
                for (int w : g.neighbors(u)) {
                    if (order.rank(w) < i) seen_by_u.push_back(colors[w]);
                }
                sort_unique(seen_by_u);
                if (static_cast<int>(seen_by_u.size()) <= r - 1) {
                    step.forbidden_neighbors.insert(step.forbidden_neighbors.end(),
                                                    seen_by_u.begin(), seen_by_u.end());
                }
            }
            sort_unique(step.forbidden_neighbors);
        }
        for (int c : step.forbidden_strongly_proper) forbidden[c] = 1;
        for (int c : step.forbidden_neighbors) forbidden[c] = 1;
        int c = 1;
        while (forbidden[c]) ++c;
        step.chosen = c;
        colors[v] = c;
        for (int fc : step.forbidden_strongly_proper) forbidden[fc] = 0;
        for (int fc : step.forbidden_neighbors) forbidden[fc] = 0;
        trace.steps.push_back(std::move(step));
    }
    return {Coloring::from_colors(std::move(colors)), std::move(trace)};
}

int theorem_bound(int k, int r) {
    if (k < 1) throw std::invalid_argument("width must be at least 1");
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    return (k - 1) * r + 1;
}

const char* to_string(ChiStatus s) {
    switch (s) {
        case ChiStatus::Exact: return "exact";
        case ChiStatus::Unknown: return "unknown";
        case ChiStatus::LowerBoundOnly: return "lower-bound-only";
    }
    return "?";
}

}  // namespace dynchroma
