#include "dynchroma/json_io.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dynchroma {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
        throw std::invalid_argument(std::string("missing field \"") + name + "\"");
    }
    return j[name];
}

int int_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_integer()) {
        throw std::invalid_argument(std::string("field \"") + name + "\" must be an integer");
    }
    return v.get<int>();
}

std::vector<int> int_array(const json& arr, const char* what) {
    if (!arr.is_array()) {
        throw std::invalid_argument(std::string(what) + " must be an array of integers");
    }
    std::vector<int> out;
    out.reserve(arr.size());
    for (const auto& x : arr) {
        if (!x.is_number_integer()) {
            throw std::invalid_argument(std::string(what) + " must be an array of integers");
        }
        out.push_back(x.get<int>());
    }
    return out;
}

std::vector<std::pair<int, int>> pair_array(const json& arr, const char* what) {
    if (!arr.is_array()) {
        throw std::invalid_argument(std::string(what) + " must be an array of pairs");
    }
    std::vector<std::pair<int, int>> out;
    out.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            throw std::invalid_argument(std::string(what) + " entries must be integer pairs");
        }
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

}  // namespace

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    int n = int_field(j, "n");
    auto edges = pair_array(field(j, "edges"), "\"edges\"");
    return Graph(n, edges);
}

json order_to_json(const LinearOrder& order) { return json(order.sequence()); }

LinearOrder order_from_json(const json& j) {
    const json* arr = nullptr;
    if (j.is_array()) {
        arr = &j;
    } else if (j.is_object() && j.contains("order")) {
        arr = &j["order"];
    } else if (j.is_object() && j.contains("witness")) {
        arr = &j["witness"];
    } else {
        throw std::invalid_argument("order json must be an array of vertices");
    }
    return LinearOrder::from_sequence(int_array(*arr, "order"));
}

json col_result_to_json(const ColNumberResult& result) {
    return json{{"t", result.t},
                {"value", result.value},
                {"method", to_string(result.method)},
                {"witness", result.witness.sequence()}};
}

json coloring_to_json(const Coloring& c) {
    return json{{"colors", c.colors}, {"palette", c.palette}};
}

Coloring coloring_from_json(const json& j) {
    const json* arr = nullptr;
    if (j.is_array()) {
        arr = &j;
    } else if (j.is_object() && j.contains("colors")) {
        arr = &j["colors"];
    } else {
        throw std::invalid_argument("coloring json must be an array or carry \"colors\"");
    }
    Coloring c = Coloring::from_colors(int_array(*arr, "colors"));
    if (j.is_object() && j.contains("palette")) {
        if (!j["palette"].is_number_integer() || j["palette"].get<int>() != c.palette) {
            throw std::invalid_argument("stated palette does not match the colors");
        }
    }
    return c;
}

json report_to_json(const VerificationReport& report) {
    json proper = json::array();
    for (const auto& pv : report.proper_violations) {
        proper.push_back(json{{"u", pv.u}, {"v", pv.v}});
    }
    json dynamic = json::array();
    for (const auto& dv : report.dynamic_violations) {
        dynamic.push_back(json{{"vertex", dv.vertex},
                               {"seen_colors", dv.seen_colors},
                               {"required", dv.required}});
    }
    return json{{"ok", report.ok},
                {"proper_violations", std::move(proper)},
                {"dynamic_violations", std::move(dynamic)}};
}

json meta_to_json(const GraphBundle& bundle) {
    if (const auto* kt = std::get_if<KTree>(&bundle.structure)) {
        return json{{"kind", "ktree"},
                    {"k", kt->k},
                    {"construction_order", kt->construction_order}};
    }
    if (const auto* sg = std::get_if<SubdividedGraph>(&bundle.structure)) {
        json parents = json::array();
        for (auto [u, v] : sg->parent_edge) parents.push_back(json::array({u, v}));
        return json{{"kind", "subdivision"},
                    {"original_count", sg->original_count},
                    {"parent_edge", std::move(parents)}};
    }
    if (const auto* lp = std::get_if<LayeredProduct>(&bundle.structure)) {
        int layers = 0;
        for (int l : lp->layer) layers = std::max(layers, l);
        return json{{"kind", "product"},
                    {"layers", layers},
                    {"base",
                     json{{"k", lp->base.k},
                          {"construction_order", lp->base.construction_order},
                          {"graph", graph_to_json(lp->base.graph)}}},
                    {"layer", lp->layer},
                    {"projection", lp->projection}};
    }
    throw std::invalid_argument("graph carries no structure metadata");
}

void meta_from_json(GraphBundle& bundle, const json& meta) {
    const json& kind_field = field(meta, "kind");
    if (!kind_field.is_string()) throw std::invalid_argument("\"kind\" must be a string");
    const std::string kind = kind_field.get<std::string>();
    if (kind == "ktree") {
        KTree kt;
        kt.graph = bundle.graph;
        kt.k = int_field(meta, "k");
        kt.construction_order = int_array(field(meta, "construction_order"), "\"construction_order\"");
        validate(kt);
        bundle.structure = std::move(kt);
    } else if (kind == "subdivision") {
        SubdividedGraph sg;
        sg.graph = bundle.graph;
        sg.original_count = int_field(meta, "original_count");
        sg.parent_edge = pair_array(field(meta, "parent_edge"), "\"parent_edge\"");
        validate(sg);
        bundle.structure = std::move(sg);
    } else if (kind == "product") {
        const json& base = field(meta, "base");
        LayeredProduct lp;
        lp.graph = bundle.graph;
        lp.base.graph = graph_from_json(field(base, "graph"));
        lp.base.k = int_field(base, "k");
        lp.base.construction_order =
            int_array(field(base, "construction_order"), "\"construction_order\"");
        lp.layer = int_array(field(meta, "layer"), "\"layer\"");
        lp.projection = int_array(field(meta, "projection"), "\"projection\"");
        validate(lp);
        int layers = int_field(meta, "layers");
        for (int l : lp.layer) {
            if (l > layers) throw std::invalid_argument("layer index above the stated layer count");
        }
        bundle.structure = std::move(lp);
    } else {
        throw std::invalid_argument("unknown metadata kind '" + kind + "'");
    }
}

}  // namespace dynchroma
