#include "dynchroma/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dynchroma/errors.hpp"

namespace dynchroma {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) {
        throw std::invalid_argument("vertex count must be nonnegative, got " + std::to_string(n));
    }
    adj_.resize(n);
    std::vector<std::pair<int, int>> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("edge " + pair_str(u, v) + " out of range for " +
                                        std::to_string(n) + " vertices");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop " + pair_str(u, v));
        }
        if (u > v) std::swap(u, v);
        normalized.emplace_back(u, v);
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
    for (auto [u, v] : normalized) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    edge_count_ = static_cast<int>(normalized.size());
}

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u) {
        for (int v : adj_[u]) {
            if (v > u) out.emplace_back(u, v);
        }
    }
    return out;
}

namespace {

int parse_int_token(const std::string& token, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line, "bad integer '" + token + "'");
    }
    return value;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    int edge_lines = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "c") continue;
        if (tokens[0] == "p") {
            if (n >= 0) throw ParseError(line_no, "duplicate problem line");
            if (tokens.size() != 4 || tokens[1] != "edge") {
                throw ParseError(line_no, "problem line must be 'p edge <n> <m>'");
            }
            n = parse_int_token(tokens[2], line_no);
            m = parse_int_token(tokens[3], line_no);
            if (n < 0 || m < 0) throw ParseError(line_no, "negative size in problem line");
            continue;
        }
        if (tokens[0] == "e") {
            if (n < 0) throw ParseError(line_no, "edge line before problem line");
            if (tokens.size() != 3) throw ParseError(line_no, "edge line must be 'e <u> <v>'");
            int u = parse_int_token(tokens[1], line_no);
            int v = parse_int_token(tokens[2], line_no);
            if (u < 1 || u > n || v < 1 || v > n) {
                throw ParseError(line_no, "endpoint out of range 1.." + std::to_string(n));
            }
            if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(u - 1, v - 1);
            ++edge_lines;
            continue;
        }
        throw ParseError(line_no, "unrecognized line '" + tokens[0] + "'");
    }
    if (n < 0) throw ParseError(0, "missing problem line");
    if (edge_lines != m) {
        throw ParseError(0, "header announces " + std::to_string(m) + " edges, found " +
                                std::to_string(edge_lines));
    }
    return Graph(n, edges);
}

std::string write_dimacs(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    }
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v', got " + std::to_string(tokens.size()) + " tokens");
        int u = parse_int_token(tokens[0], line_no);
        int v = parse_int_token(tokens[1], line_no);
        if (u < 0 || v < 0) throw ParseError(line_no, "negative vertex index");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(u, v);
        n = std::max({n, u + 1, v + 1});
    }
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph(n, edges);
}

Graph add_universal(const Graph& g, int count) {
    if (count < 0) throw std::invalid_argument("universal vertex count must be nonnegative");
    int n0 = g.vertex_count();
    auto edges = g.edges();
    for (int i = 0; i < count; ++i) {
        int w = n0 + i;
        for (int u = 0; u < w; ++u) edges.emplace_back(u, w);
    }
    return Graph(n0 + count, edges);
}

Graph square(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v > u) edges.emplace_back(u, v);
            for (int w : g.neighbors(v)) {
                if (w > u) edges.emplace_back(u, w);
            }
        }
    }
    return Graph(g.vertex_count(), edges);
}

}  // namespace dynchroma
