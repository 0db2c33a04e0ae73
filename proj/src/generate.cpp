#include "dynchroma/generate.hpp"

#include <charconv>
#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

namespace dynchroma {

namespace {

std::vector<std::string> split_colons(const std::string& spec) {
    std::vector<std::string> tokens;
    size_t start = 0;
    while (true) {
        size_t pos = spec.find(':', start);
        if (pos == std::string::npos) {
            tokens.push_back(spec.substr(start));
            return tokens;
        }
        tokens.push_back(spec.substr(start, pos - start));
        start = pos + 1;
    }
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

std::uint64_t take_u64(const std::vector<std::string>& tokens, size_t& pos, const char* what) {
    if (pos >= tokens.size()) {
        throw std::invalid_argument(std::string("generator spec ends where the ") + what +
                                    " was expected");
    }
    const std::string& tok = tokens[pos];
    std::uint64_t value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
        throw std::invalid_argument(std::string("bad ") + what + " '" + tok + "'");
    }
    ++pos;
    return value;
}

int take_int(const std::vector<std::string>& tokens, size_t& pos, const char* what) {
    std::uint64_t value = take_u64(tokens, pos, what);
    if (value > INT_MAX) {
        throw std::invalid_argument(std::string(what) + " " + std::to_string(value) +
                                    " is too large");
    }
    return static_cast<int>(value);
}

// Note the seed rule: a ktree spec greedily consumes a following integer
// token as its seed, so inside composite specs (subdivide:ktree:...:times)
// the seed must be written out; only a trailing ktree may omit it.
KTree take_ktree(const std::vector<std::string>& tokens, size_t& pos, std::uint64_t default_seed) {
    int k = take_int(tokens, pos, "k-tree width");
    int n = take_int(tokens, pos, "k-tree vertex count");
    std::uint64_t seed = default_seed;
    if (pos < tokens.size() && all_digits(tokens[pos])) {
        seed = take_u64(tokens, pos, "seed");
    }
    return random_k_tree(k, n, seed);
}

GraphBundle parse_bundle(const std::vector<std::string>& tokens, size_t& pos,
                         std::uint64_t default_seed) {
    if (pos >= tokens.size()) throw std::invalid_argument("empty generator spec");
    const std::string kind = tokens[pos++];
    GraphBundle bundle;
    if (kind == "complete") {
        bundle.graph = complete_graph(take_int(tokens, pos, "vertex count"));
    } else if (kind == "path") {
        bundle.graph = path_graph(take_int(tokens, pos, "vertex count"));
    } else if (kind == "cycle") {
        bundle.graph = cycle_graph(take_int(tokens, pos, "vertex count"));
    } else if (kind == "ktree") {
        KTree kt = take_ktree(tokens, pos, default_seed);
        bundle.graph = kt.graph;
        bundle.structure = std::move(kt);
    } else if (kind == "subdivide") {
        GraphBundle inner = parse_bundle(tokens, pos, default_seed);
        SubdividedGraph sg = subdivide(inner.graph, take_int(tokens, pos, "subdivision count"));
        bundle.graph = sg.graph;
        bundle.structure = std::move(sg);
    } else if (kind == "universal") {
        GraphBundle inner = parse_bundle(tokens, pos, default_seed);
        bundle.graph = add_universal(inner.graph, take_int(tokens, pos, "universal vertex count"));
    } else if (kind == "square") {
        GraphBundle inner = parse_bundle(tokens, pos, default_seed);
        bundle.graph = square(inner.graph);
    } else if (kind == "product") {
        if (pos >= tokens.size() || tokens[pos] != "ktree") {
            throw std::invalid_argument("product base must be a ktree spec");
        }
        ++pos;
        KTree base = take_ktree(tokens, pos, default_seed);
        LayeredProduct lp =
            strong_product_with_path(base, take_int(tokens, pos, "layer count"));
        bundle.graph = lp.graph;
        bundle.structure = std::move(lp);
    } else {
        throw std::invalid_argument("unknown generator '" + kind + "'");
    }
    return bundle;
}

}  // namespace

GraphBundle generate_from_spec(const std::string& spec, std::uint64_t default_seed) {
    auto tokens = split_colons(spec);
    size_t pos = 0;
    GraphBundle bundle = parse_bundle(tokens, pos, default_seed);
    if (pos != tokens.size()) {
        throw std::invalid_argument("unexpected trailing token '" + tokens[pos] + "'");
    }
    return bundle;
}

}  // namespace dynchroma
