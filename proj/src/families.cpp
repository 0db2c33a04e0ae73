#include "dynchroma/families.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace dynchroma {

SubdividedGraph subdivide(const Graph& g, int times) {
    if (times < 1) throw std::invalid_argument("subdivision count must be at least 1");
    SubdividedGraph sg;
    sg.original_count = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    int next = g.vertex_count();
    for (auto [u, v] : g.edges()) {
        int prev = u;
        for (int i = 0; i < times; ++i) {
            edges.emplace_back(prev, next);
            sg.parent_edge.emplace_back(u, v);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    sg.graph = Graph(next, edges);
    return sg;
}

std::vector<std::pair<int, int>> contracted_edges(const SubdividedGraph& sg) {
    std::vector<std::pair<int, int>> out = sg.parent_edge;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void validate(const SubdividedGraph& sg) {
    const Graph& g = sg.graph;
    int n = g.vertex_count();
    if (sg.original_count < 0 || sg.original_count > n) {
        throw std::invalid_argument("original vertex count out of range");
    }
    if (static_cast<int>(sg.parent_edge.size()) != n - sg.original_count) {
        throw std::invalid_argument("parent edge list does not cover the subdivision vertices");
    }
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(sg.parent_edge.size()); ++i) {
        auto [u, v] = sg.parent_edge[i];
        if (u < 0 || v < 0 || u >= sg.original_count || v >= sg.original_count || u >= v) {
            throw std::invalid_argument("parent edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ") is not an ordered original pair");
        }
        groups[{u, v}].push_back(sg.original_count + i);
    }
    for (int s = sg.original_count; s < n; ++s) {
        if (g.degree(s) != 2) {
            throw std::invalid_argument("subdivision vertex " + std::to_string(s) +
                                        " has degree " + std::to_string(g.degree(s)));
        }
    }
    for (int u = 0; u < sg.original_count; ++u) {
        for (int v : g.neighbors(u)) {
            if (v < sg.original_count) {
                throw std::invalid_argument("originals " + std::to_string(u) + " and " +
                                            std::to_string(v) + " are directly adjacent");
            }
        }
    }
    int expected_edges = 0;
    for (const auto& [edge, members] : groups) {
        auto [u, v] = edge;
        expected_edges += static_cast<int>(members.size()) + 1;
        std::vector<char> in_group(n, 0);
        for (int s : members) in_group[s] = 1;
        int first = -1;
        for (int w : g.neighbors(u)) {
            if (in_group[w]) {
                if (first >= 0) {
                    throw std::invalid_argument("subdivision path of (" + std::to_string(u) +
                                                ", " + std::to_string(v) + ") branches at its start");
                }
                first = w;
            }
        }
        if (first < 0) {
            throw std::invalid_argument("no subdivision path leaves vertex " + std::to_string(u));
        }
        int prev = u, cur = first, walked = 1;
        while (true) {
            const auto& nb = g.neighbors(cur);
            int next = nb[0] == prev ? nb[1] : nb[0];
            if (next == v) break;
            if (!in_group[next]) {
                throw std::invalid_argument("subdivision path of (" + std::to_string(u) + ", " +
                                            std::to_string(v) + ") strays to vertex " +
                                            std::to_string(next));
            }
            prev = cur;
            cur = next;
            ++walked;
        }
        if (walked != static_cast<int>(members.size())) {
            throw std::invalid_argument("subdivision path of (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ") misses some of its vertices");
        }
    }
    if (expected_edges != g.edge_count()) {
        throw std::invalid_argument("edge count does not match the subdivision paths");
    }
}

namespace {

// Unbiased draw from [0, m) by rejection.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t m) {
    std::uint64_t x, r;
    do {
        x = rng();
        r = x % m;
    } while (x - r > std::numeric_limits<std::uint64_t>::max() - (m - 1));
    return r;
}

}  // namespace

KTree random_k_tree(int k, int n, std::uint64_t seed) {
    if (k < 0) throw std::invalid_argument("k-tree width must be nonnegative");
    if (n < k + 1) {
        throw std::invalid_argument("a " + std::to_string(k) + "-tree needs at least " +
                                    std::to_string(k + 1) + " vertices");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> adj(n);
    auto connected = [&](int a, int b) {
        for (int w : adj[a]) {
            if (w == b) return true;
        }
        return false;
    };
    auto link = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u <= k; ++u) {
        for (int v = u + 1; v <= k; ++v) {
            edges.emplace_back(u, v);
            link(u, v);
        }
    }
    for (int v = k + 1; v < n; ++v) {
        std::vector<int> host(k);
        while (true) {
            int w = static_cast<int>(bounded(rng, v));
            std::vector<int> cand = adj[w];
            cand.push_back(w);
            if (static_cast<int>(cand.size()) < k) continue;
            for (int i = 0; i < k; ++i) {
                int j = i + static_cast<int>(bounded(rng, cand.size() - i));
                std::swap(cand[i], cand[j]);
                host[i] = cand[i];
            }
            bool clique = true;
            for (int i = 0; i < k && clique; ++i) {
                for (int j = i + 1; j < k && clique; ++j) {
                    clique = connected(host[i], host[j]);
                }
            }
            if (clique) break;
        }
        for (int u : host) {
            edges.emplace_back(u, v);
            link(u, v);
        }
    }
    KTree kt;
    kt.k = k;
    kt.graph = Graph(n, edges);
    kt.construction_order.resize(n);
    for (int v = 0; v < n; ++v) kt.construction_order[v] = v;
    return kt;
}

void validate(const KTree& kt) {
    const Graph& g = kt.graph;
    int n = g.vertex_count();
    if (kt.k < 0) throw std::invalid_argument("k-tree width must be nonnegative");
    if (n < kt.k + 1) throw std::invalid_argument("k-tree has fewer than k+1 vertices");
    if (static_cast<int>(kt.construction_order.size()) != n) {
        throw std::invalid_argument("construction order length does not match the graph");
    }
    std::vector<int> rank(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = kt.construction_order[i];
        if (v < 0 || v >= n || rank[v] >= 0) {
            throw std::invalid_argument("construction order is not a permutation");
        }
        rank[v] = i;
    }
    for (int i = 0; i <= kt.k; ++i) {
        for (int j = i + 1; j <= kt.k; ++j) {
            if (!g.has_edge(kt.construction_order[i], kt.construction_order[j])) {
                throw std::invalid_argument("base vertices are not a clique");
            }
        }
    }
    for (int i = kt.k + 1; i < n; ++i) {
        int v = kt.construction_order[i];
        std::vector<int> earlier;
        for (int u : g.neighbors(v)) {
            if (rank[u] < i) earlier.push_back(u);
        }
        if (static_cast<int>(earlier.size()) != kt.k) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " attaches to " +
                                        std::to_string(earlier.size()) + " earlier vertices, expected " +
                                        std::to_string(kt.k));
        }
        for (size_t a = 0; a < earlier.size(); ++a) {
            for (size_t b = a + 1; b < earlier.size(); ++b) {
                if (!g.has_edge(earlier[a], earlier[b])) {
                    throw std::invalid_argument("host of vertex " + std::to_string(v) +
                                                " is not a clique");
                }
            }
        }
    }
}

LayeredProduct strong_product_with_path(const KTree& h, int layers) {
    return strong_product_with_path(h, layers, [](int, int) { return true; });
}

LayeredProduct strong_product_with_path(const KTree& h, int layers, const KeepPredicate& keep) {
    if (layers < 1) throw std::invalid_argument("product needs at least 1 layer");
    validate(h);
    const Graph& hg = h.graph;
    int nh = hg.vertex_count();
    std::vector<int> id(static_cast<size_t>(nh) * layers, -1);
    auto slot = [&](int x, int i) -> int& { return id[static_cast<size_t>(i - 1) * nh + x]; };
    LayeredProduct lp;
    lp.base = h;
    int next = 0;
    for (int i = 1; i <= layers; ++i) {
        for (int x = 0; x < nh; ++x) {
            if (!keep(x, i)) continue;
            slot(x, i) = next++;
            lp.projection.push_back(x);
            lp.layer.push_back(i);
        }
    }
    std::vector<std::pair<int, int>> edges;
    auto maybe = [&](int a, int b) {
        if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    };
    for (int i = 1; i <= layers; ++i) {
        for (auto [x, y] : hg.edges()) {
            maybe(slot(x, i), slot(y, i));
            if (i < layers) {
                maybe(slot(x, i), slot(y, i + 1));
                maybe(slot(y, i), slot(x, i + 1));
            }
        }
        if (i < layers) {
            for (int x = 0; x < nh; ++x) maybe(slot(x, i), slot(x, i + 1));
        }
    }
    lp.graph = Graph(next, edges);
    return lp;
}

void validate(const LayeredProduct& lp) {
    validate(lp.base);
    const Graph& g = lp.graph;
    const Graph& hg = lp.h();
    int n = g.vertex_count();
    if (static_cast<int>(lp.layer.size()) != n || static_cast<int>(lp.projection.size()) != n) {
        throw std::invalid_argument("layer or projection map does not cover the product");
    }
    std::map<std::pair<int, int>, int> seen;
    for (int v = 0; v < n; ++v) {
        if (lp.layer[v] < 1) throw std::invalid_argument("layer index below 1");
        if (lp.projection[v] < 0 || lp.projection[v] >= hg.vertex_count()) {
            throw std::invalid_argument("projection outside the base graph");
        }
        if (!seen.emplace(std::make_pair(lp.projection[v], lp.layer[v]), v).second) {
            throw std::invalid_argument("two vertices share projection and layer");
        }
    }
    for (auto [a, b] : g.edges()) {
        if (std::abs(lp.layer[a] - lp.layer[b]) > 1) {
            throw std::invalid_argument("edge spans non-adjacent layers");
        }
        int x = lp.projection[a], y = lp.projection[b];
        if (x != y && !hg.has_edge(x, y)) {
            throw std::invalid_argument("edge projects to a non-edge of the base");
        }
    }
}

}  // namespace dynchroma
