#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dynchroma/graph.hpp"
#include "dynchroma/order.hpp"

namespace testutil {

// Fixture randomness sticks to raw engine draws so fixtures do not depend
// on distribution internals.
inline bool chance(std::mt19937_64& rng, int permille) {
    return rng() % 1000 < static_cast<std::uint64_t>(permille);
}

inline int pick(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % n); }

inline dynchroma::Graph random_graph(int n, int permille, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (chance(rng, permille)) edges.emplace_back(u, v);
        }
    }
    return dynchroma::Graph(n, edges);
}

inline dynchroma::Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(pick(rng, v), v);
    return dynchroma::Graph(n, edges);
}

inline dynchroma::LinearOrder random_order(int n, std::mt19937_64& rng) {
    std::vector<int> seq(n);
    for (int v = 0; v < n; ++v) seq[v] = v;
    for (int i = n - 1; i > 0; --i) std::swap(seq[i], seq[pick(rng, i + 1)]);
    return dynchroma::LinearOrder::from_sequence(std::move(seq));
}

}  // namespace testutil
