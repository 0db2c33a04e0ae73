#include "dynchroma.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dynchroma/coloring.hpp"
#include "dynchroma/errors.hpp"
#include "dynchroma/generate.hpp"
#include "dynchroma/graph.hpp"
#include "dynchroma/json_io.hpp"
#include "dynchroma/order.hpp"

struct dc_graph {
    dynchroma::GraphBundle bundle;
};

struct dc_order {
    dynchroma::LinearOrder order;
    std::string method = "loaded";
    int value = 0;
    int t = 0;
};

struct dc_coloring {
    dynchroma::Coloring coloring;
};

namespace {

thread_local std::string g_last_error;

dc_status fail(dc_status code, const char* message) {
    g_last_error = message;
    return code;
}

template <typename F>
dc_status guarded(F&& f) {
    try {
        return f();
    } catch (const dynchroma::ParseError& e) {
        return fail(DC_EPARSE, e.what());
    } catch (const dynchroma::CapExceeded& e) {
        return fail(DC_ECAP, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(DC_EPARSE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(DC_ENOMEM, "out of memory");
    } catch (const std::exception& e) {
        return fail(DC_EINVAL, e.what());
    }
}

dc_status out_string(const std::string& s, char** out) {
    char* d = static_cast<char*>(std::malloc(s.size() + 1));
    if (!d) return fail(DC_ENOMEM, "out of memory");
    std::memcpy(d, s.c_str(), s.size() + 1);
    *out = d;
    return DC_OK;
}

}  // namespace

extern "C" {

const char* dc_last_error(void) { return g_last_error.c_str(); }

void dc_string_free(char* s) { std::free(s); }

dc_status dc_graph_build(int n, const int* edge_u, const int* edge_v, size_t edge_count,
                         dc_graph** out) {
    if (!out || (edge_count > 0 && (!edge_u || !edge_v))) return fail(DC_EINVAL, "null argument");
    return guarded([&] {
        std::vector<std::pair<int, int>> edges;
        edges.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(edge_u[i], edge_v[i]);
        *out = new dc_graph{dynchroma::GraphBundle{dynchroma::Graph(n, edges), {}}};
        return DC_OK;
    });
}

dc_status dc_graph_from_spec(const char* spec, uint64_t default_seed, dc_graph** out) {
    if (!spec || !out) return fail(DC_EINVAL, "null argument");
    return guarded([&] {
        *out = new dc_graph{dynchroma::generate_from_spec(spec, default_seed)};
        return DC_OK;
    });
}

dc_status dc_graph_parse_dimacs(const char* text, dc_graph** out) {
    if (!text || !out) return fail(DC_EINVAL, "null argument");
    return guarded([&] {
        *out = new dc_graph{dynchroma::GraphBundle{dynchroma::parse_dimacs(text), {}}};
        return DC_OK;
    });
}

dc_status dc_graph_parse_edge_list(const char* text, dc_graph** out) {
    if (!text || !out) return fail(DC_EINVAL, "null argument");
    return guarded([&] {
        *out = new dc_graph{dynchroma::GraphBundle{dynchroma::parse_edge_list(text), {}}};
        return DC_OK;
    });
}

dc_status dc_graph_from_json(const char* text, dc_graph** out) {
    if (!text || !out) return fail(DC_EINVAL, "null argument");
    return guarded([&] {
        auto j = nlohmann::json::parse(text);
        *out = new dc_graph{dynchroma::GraphBundle{dynchroma::graph_from_json(j), {}}};
        return DC_OK;
    });
}

void dc_graph_free(dc_graph* g) { delete g; }

int dc_graph_vertex_count(const dc_graph* g) { return g ? g->bundle.graph.vertex_count() : -1; }

int dc_graph_edge_count(const dc_graph* g) { return g ? g->bundle.graph.edge_count() : -1; }

int dc_graph_max_degree(const dc_graph* g) { return g ? g->bundle.graph.max_degree() : -1; }

int dc_graph_has_meta(const dc_graph* g) { return g && g->bundle.has_structure() ? 1 : 0; }

dc_status dc_graph_write_dimacs(const dc_graph* g, char** out) {
    if (!g || !out) return fail(DC_EINVAL, "null argument");
    return guarded([&] { return out_string(dynchroma::write_dimacs(g->bundle.graph), out); });
}

dc_status dc_graph_to_json(const dc_graph* g, char** out) {
    if (!g || !out) return fail(DC_EINVAL, "null argument");
    return guarded([&] { return out_string(dynchroma::graph_to_json(g->bundle.graph).dump(), out); });
}

dc_status dc_graph_meta_to_json(const dc_graph* g, char** out) {
    if (!g || !out) return fail(DC_EINVAL, "null argument");
    if (!g->bundle.has_structure()) {
        return fail(DC_ENOMETA, "graph carries no structure metadata");
    }
    return guarded([&] { return out_string(dynchroma::meta_to_json(g->bundle).dump(), out); });
}

dc_status dc_graph_attach_meta_json(dc_graph* g, const char* meta_text) {
    if (!g || !meta_text) return fail(DC_EINVAL, "null argument");
    return guarded([&] {
        auto j = nlohmann::json::parse(meta_text);
        dynchroma::meta_from_json(g->bundle, j);
        return DC_OK;
    });
}

dc_status dc_graph_square(const dc_graph* g, dc_graph** out) {
    if (!g || !out) return fail(DC_EINVAL, "null argument");
    return guarded([&] {
        *out = new dc_graph{dynchroma::GraphBundle{dynchroma::square(g->bundle.graph), {}}};
        return DC_OK;
    });
}

dc_status dc_order_compute(const dc_graph* g, const char* strategy, int t, int cap,
                           dc_order** out) {
    if (!g || !strategy || !out) return fail(DC_EINVAL, "null argument");
    return guarded([&]() -> dc_status {
        const std::string name = strategy;
        const dynchroma::Graph& graph = g->bundle.graph;
        dynchroma::ColNumberResult res;
        if (name == "exact-dp") {
            res = dynchroma::exact_col_t(graph, t, cap);
        } else if (name == "exact-brute") {
            res = dynchroma::exact_col_t_bruteforce(graph, t, cap);
        } else if (name == "reverse-peo") {
            const auto* kt = std::get_if<dynchroma::KTree>(&g->bundle.structure);
            if (!kt) return fail(DC_ENOMETA, "strategy reverse-peo needs k-tree metadata");
            res = dynchroma::upper_bound_result(graph, dynchroma::reverse_peo_order(*kt), t);
        } else if (name == "product") {
            const auto* lp = std::get_if<dynchroma::LayeredProduct>(&g->bundle.structure);
            if (!lp) return fail(DC_ENOMETA, "strategy product needs layered-product metadata");
            res = dynchroma::upper_bound_result(
                graph, dynchroma::product_order(*lp, dynchroma::reverse_peo_order(lp->base)), t);
        } else if (name == "subdivision") {
            const auto* sg = std::get_if<dynchroma::SubdividedGraph>(&g->bundle.structure);
            if (!sg) return fail(DC_ENOMETA, "strategy subdivision needs subdivision metadata");
            res = dynchroma::upper_bound_result(graph, dynchroma::subdivision_order(*sg), t);
        } else if (name == "min-backreach") {
            res = dynchroma::upper_bound_result(graph, dynchroma::min_backreach_order(graph, t), t);
        } else {
            return fail(DC_EINVAL, ("unknown strategy '" + name + "'").c_str());
        }
        *out = new dc_order{std::move(res.witness), dynchroma::to_string(res.method), res.value,
                            res.t};
        return DC_OK;
    });
}

dc_status dc_order_from_json(const char* text, dc_order** out) {
    if (!text || !out) return fail(DC_EINVAL, "null argument");
    return guarded([&] {
        auto j = nlohmann::json::parse(text);
        *out = new dc_order{dynchroma::order_from_json(j)};
        return DC_OK;
    });
}

void dc_order_free(dc_order* o) { delete o; }

dc_status dc_order_to_json(const dc_order* o, char** out) {
    if (!o || !out) return fail(DC_EINVAL, "null argument");
    return guarded([&] { return out_string(dynchroma::order_to_json(o->order).dump(), out); });
}

int dc_order_size(const dc_order* o) { return o ? o->order.size() : -1; }

int dc_order_width(const dc_graph* g, const dc_order* o, int t) {
    if (!g || !o) {
        g_last_error = "null argument";
        return -1;
    }
    try {
        return dynchroma::order_width(g->bundle.graph, o->order, t);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return -1;
    }
}

const char* dc_order_method(const dc_order* o) { return o ? o->method.c_str() : ""; }

int dc_order_value(const dc_order* o) { return o ? o->value : -1; }

int dc_order_t(const dc_order* o) { return o ? o->t : -1; }

dc_status dc_greedy_color(const dc_graph* g, const dc_order* o, int r, dc_coloring** out) {
    if (!g || !o || !out) return fail(DC_EINVAL, "null argument");
    return guarded([&] {
        auto [coloring, trace] = dynchroma::greedy_r_dynamic(g->bundle.graph, o->order, r);
        (void)trace;
        *out = new dc_coloring{std::move(coloring)};
        return DC_OK;
    });
}

dc_status dc_coloring_from_json(const char* text, dc_coloring** out) {
    if (!text || !out) return fail(DC_EINVAL, "null argument");
    return guarded([&] {
        auto j = nlohmann::json::parse(text);
        *out = new dc_coloring{dynchroma::coloring_from_json(j)};
        return DC_OK;
    });
}

void dc_coloring_free(dc_coloring* c) { delete c; }

dc_status dc_coloring_to_json(const dc_coloring* c, char** out) {
    if (!c || !out) return fail(DC_EINVAL, "null argument");
    return guarded(
        [&] { return out_string(dynchroma::coloring_to_json(c->coloring).dump(), out); });
}

int dc_coloring_size(const dc_coloring* c) {
    return c ? static_cast<int>(c->coloring.colors.size()) : -1;
}

int dc_coloring_palette(const dc_coloring* c) { return c ? c->coloring.palette : -1; }

int dc_coloring_color(const dc_coloring* c, int v) {
    if (!c || v < 0 || v >= static_cast<int>(c->coloring.colors.size())) {
        g_last_error = "vertex out of range";
        return -1;
    }
    return c->coloring.colors[v];
}

dc_status dc_verify(const dc_graph* g, const dc_coloring* c, int r, int* ok, char** report_json) {
    if (!g || !c || !ok) return fail(DC_EINVAL, "null argument");
    return guarded([&]() -> dc_status {
        auto report = dynchroma::verify_r_dynamic(g->bundle.graph, c->coloring, r);
        *ok = report.ok ? 1 : 0;
        if (report_json) return out_string(dynchroma::report_to_json(report).dump(), report_json);
        return DC_OK;
    });
}

dc_status dc_exact_chi_r(const dc_graph* g, int r, int color_cap, uint64_t node_budget,
                         int* value, int* lower_bound, uint64_t* nodes_used,
                         dc_coloring** witness) {
    if (!g || !value) return fail(DC_EINVAL, "null argument");
    return guarded([&]() -> dc_status {
        auto res = dynchroma::exact_chi_r(g->bundle.graph, r, color_cap, node_budget);
        if (lower_bound) *lower_bound = res.lower_bound;
        if (nodes_used) *nodes_used = res.nodes_used;
        switch (res.status) {
            case dynchroma::ChiStatus::Exact:
                *value = res.value;
                if (witness && res.witness) *witness = new dc_coloring{*res.witness};
                return DC_OK;
            case dynchroma::ChiStatus::Unknown:
                return fail(DC_EBUDGET, "node budget exhausted before an exact answer");
            case dynchroma::ChiStatus::LowerBoundOnly:
                return fail(DC_ECAP, ("no coloring within the color cap; the value is at least " +
                                      std::to_string(res.lower_bound))
                                         .c_str());
        }
        return fail(DC_EINVAL, "unreachable");
    });
}

dc_status dc_chi_two_distance(const dc_graph* g, uint64_t node_budget, int* value) {
    if (!g || !value) return fail(DC_EINVAL, "null argument");
    return guarded([&]() -> dc_status {
        auto res = dynchroma::chi_two_distance(g->bundle.graph, node_budget);
        switch (res.status) {
            case dynchroma::ChiStatus::Exact:
                *value = res.value;
                return DC_OK;
            case dynchroma::ChiStatus::Unknown:
                return fail(DC_EBUDGET, "node budget exhausted before an exact answer");
            case dynchroma::ChiStatus::LowerBoundOnly:
                return fail(DC_ECAP, "no coloring within the color cap");
        }
        return fail(DC_EINVAL, "unreachable");
    });
}

int dc_theorem_bound(int k, int r) {
    try {
        return dynchroma::theorem_bound(k, r);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return -1;
    }
}

}  // extern "C"
