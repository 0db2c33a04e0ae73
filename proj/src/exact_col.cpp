#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynchroma/errors.hpp"
#include "dynchroma/order.hpp"

namespace dynchroma {

namespace {

constexpr int kHardDpLimit = 26;  // 2^n byte table

}  // namespace

// Key insight: Reach_t(v, pi) depends only on v and the set S of vertices
// ranked after v, so col_t minimization runs over suffix sets instead of
// orders.  f(S) = min over v not in S of max(backreach(v, S), f(S + v)),
// f(V) = 0, and col_t = f(empty); backreach(v, S) counts v plus the
// vertices outside S joined to v by a path of length <= t through S.
ColNumberResult exact_col_t(const Graph& g, int t, int cap) {
    if (t < 0) throw std::invalid_argument("reach radius must be nonnegative");
    if (cap <= 0) cap = kDefaultDpCap;
    int n = g.vertex_count();
    if (n > cap) {
        throw CapExceeded("graph has " + std::to_string(n) +
                          " vertices, subset solver cap is " + std::to_string(cap));
    }
    if (n > kHardDpLimit) {
        throw CapExceeded("subset solver handles at most " + std::to_string(kHardDpLimit) +
                          " vertices");
    }
    if (n == 0) return ColNumberResult{t, 0, LinearOrder::identity(0), ColMethod::ExactDp};

    std::vector<std::uint32_t> adj_mask(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int w : g.neighbors(v)) adj_mask[v] |= 1u << w;
    }
    auto backreach = [&](int v, std::uint32_t s) {
        std::uint32_t visited = 1u << v;
        std::uint32_t frontier = visited;
        std::uint32_t members = visited;
        for (int d = 0; d < t && frontier; ++d) {
            std::uint32_t nb = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1) {
                nb |= adj_mask[std::countr_zero(f)];
            }
            nb &= ~visited;
            visited |= nb;
            members |= nb & ~s;
            frontier = nb & s;
        }
        return std::popcount(members);
    };

    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint8_t> f(static_cast<size_t>(full) + 1, 0);
    for (std::uint32_t s = full; s-- > 0;) {
        int best = INT_MAX;
        for (int v = 0; v < n; ++v) {
            std::uint32_t bit = 1u << v;
            if (s & bit) continue;
            best = std::min(best, std::max(backreach(v, s), static_cast<int>(f[s | bit])));
        }
        f[s] = static_cast<std::uint8_t>(best);
    }

    std::vector<int> seq(n);
    std::uint32_t s = 0;
    for (int pos = n - 1; pos >= 0; --pos) {
        for (int v = 0; v < n; ++v) {
            std::uint32_t bit = 1u << v;
            if (s & bit) continue;
            if (std::max(backreach(v, s), static_cast<int>(f[s | bit])) == f[s]) {
                seq[pos] = v;
                s |= bit;
                break;
            }
        }
    }
    return ColNumberResult{t, f[0], LinearOrder::from_sequence(std::move(seq)),
                           ColMethod::ExactDp};
}

namespace {

// Reach size of v under `position`, abandoning early once it cannot stay
// below `limit`.  Deliberately a second implementation: the permutation
// oracle must not share reach machinery with the subset solver.
int reach_count_capped(const Graph& g, const std::vector<int>& position, int v, int t, int limit,
                       std::vector<int>& frontier, std::vector<int>& next,
                       std::vector<char>& visited) {
    visited.assign(g.vertex_count(), 0);
    visited[v] = 1;
    frontier.assign(1, v);
    int members = 1;
    for (int d = 0; d < t && !frontier.empty(); ++d) {
        next.clear();
        for (int u : frontier) {
            for (int w : g.neighbors(u)) {
                if (visited[w]) continue;
                visited[w] = 1;
                if (position[w] > position[v]) {
                    next.push_back(w);
                } else if (++members >= limit) {
                    return members;
                }
            }
        }
        frontier.swap(next);
    }
    return members;
}

}  // namespace

ColNumberResult exact_col_t_bruteforce(const Graph& g, int t, int cap) {
    if (t < 0) throw std::invalid_argument("reach radius must be nonnegative");
    if (cap <= 0) cap = kDefaultBruteCap;
    int n = g.vertex_count();
    if (n > cap) {
        throw CapExceeded("graph has " + std::to_string(n) +
                          " vertices, permutation solver cap is " + std::to_string(cap));
    }
    if (n == 0) {
        return ColNumberResult{t, 0, LinearOrder::identity(0), ColMethod::ExactBruteforce};
    }

    std::vector<int> perm(n), position(n), best_seq;
    for (int v = 0; v < n; ++v) perm[v] = v;
    int best = n + 1;
    std::vector<int> frontier, next;
    std::vector<char> visited;
    do {
        for (int r = 0; r < n; ++r) position[perm[r]] = r;
        int width = 0;
        for (int v = 0; v < n && width < best; ++v) {
            width = std::max(width,
                             reach_count_capped(g, position, v, t, best, frontier, next, visited));
        }
        if (width < best) {
            best = width;
            best_seq = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return ColNumberResult{t, best, LinearOrder::from_sequence(std::move(best_seq)),
                           ColMethod::ExactBruteforce};
}

}  // namespace dynchroma
