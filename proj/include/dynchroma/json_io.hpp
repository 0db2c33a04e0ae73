#pragma once

#include <string>

#include <json.hpp>

#include "dynchroma/coloring.hpp"
#include "dynchroma/families.hpp"
#include "dynchroma/generate.hpp"
#include "dynchroma/graph.hpp"
#include "dynchroma/order.hpp"

namespace dynchroma {

// Canonical JSON forms.  Readers are lenient where noted; writers always
// emit the canonical shape.

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Writer emits a bare array.  Reader also accepts {"order": [...]} and
// {"witness": [...]}.
nlohmann::json order_to_json(const LinearOrder& order);
LinearOrder order_from_json(const nlohmann::json& j);

nlohmann::json col_result_to_json(const ColNumberResult& result);

// Writer emits {"colors": [...], "palette": n}.  Reader also accepts a
// bare array of colors.
nlohmann::json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report);

// Sidecar metadata describing generator structure.  One of:
//   {"kind":"ktree","k":...,"construction_order":[...]}
//   {"kind":"subdivision","original_count":...,"parent_edge":[[u,v],...]}
//   {"kind":"product","layers":...,"base":{... ktree meta ...},
//    "layer":[...],"projection":[...]}
// meta_from_json validates the reconstructed structure against the graph
// and throws std::invalid_argument if they disagree.
nlohmann::json meta_to_json(const GraphBundle& bundle);
void meta_from_json(GraphBundle& bundle, const nlohmann::json& meta);

}  // namespace dynchroma
