#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "dynchroma/families.hpp"
#include "dynchroma/graph.hpp"

namespace dynchroma {

// A graph plus whatever structure its generator carried.  Wrapping
// generators (universal, square) discard inner structure; subdivide keeps
// the subdivision record of its inner graph.
struct GraphBundle {
    Graph graph;
    std::variant<std::monostate, KTree, SubdividedGraph, LayeredProduct> structure;

    bool has_structure() const { return structure.index() != 0; }
};

// Generator spec grammar (colon-separated):
//   complete:n | path:n | cycle:n
//   ktree:k:n:seed            (seed may be omitted at the end of a spec)
//   subdivide:<inner>:times
//   universal:<inner>:count
//   product:ktree:k:n:seed:layers
//   square:<inner>
// Bad specs raise std::invalid_argument.
GraphBundle generate_from_spec(const std::string& spec, std::uint64_t default_seed);

}  // namespace dynchroma
