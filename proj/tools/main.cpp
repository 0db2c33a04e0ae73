#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynchroma.h"

using nlohmann::json;

namespace {

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void bail(int code, const std::string& message) { throw CliError{code, message}; }

int exit_code_for(dc_status st) {
    switch (st) {
        case DC_OK: return 0;
        case DC_ECAP:
        case DC_EBUDGET: return 3;
        default: return 2;
    }
}

void check(dc_status st) {
    if (st != DC_OK) bail(exit_code_for(st), dc_last_error());
}

struct GraphHandle {
    dc_graph* g = nullptr;
    ~GraphHandle() { dc_graph_free(g); }
};

struct OrderHandle {
    dc_order* o = nullptr;
    ~OrderHandle() { dc_order_free(o); }
};

struct ColoringHandle {
    dc_coloring* c = nullptr;
    ~ColoringHandle() { dc_coloring_free(c); }
};

struct CStr {
    char* s = nullptr;
    ~CStr() { dc_string_free(s); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bail(2, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) bail(2, "cannot write '" + path + "'");
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        bail(2, what + ": " + e.what());
    }
}

struct Opts {
    std::string input, gen, output, format = "text";
    std::string strategy, order_file, coloring_file;
    int t = 2;
    int r = 0;
    int cap = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    bool budget_given = false;
};

std::string graph_json_text(dc_graph* g) {
    CStr s;
    check(dc_graph_to_json(g, &s.s));
    return s.s;
}

GraphHandle load_graph(const Opts& opt) {
    if (opt.input.empty() == opt.gen.empty()) {
        bail(2, "exactly one of --input and --gen is required");
    }
    GraphHandle h;
    if (!opt.gen.empty()) {
        check(dc_graph_from_spec(opt.gen.c_str(), opt.seed, &h.g));
        return h;
    }
    std::string text = read_file(opt.input);
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j = parse_json(text, opt.input);
        if (j.is_object() && j.contains("graph")) {
            check(dc_graph_from_json(j["graph"].dump().c_str(), &h.g));
            if (j.contains("meta") && !j["meta"].is_null()) {
                check(dc_graph_attach_meta_json(h.g, j["meta"].dump().c_str()));
            }
        } else {
            check(dc_graph_from_json(text.c_str(), &h.g));
        }
    } else {
        std::istringstream lines(text);
        std::string line, head;
        while (std::getline(lines, line)) {
            std::istringstream ls(line);
            if (ls >> head) break;
            head.clear();
        }
        if (head == "p" || head == "c") {
            check(dc_graph_parse_dimacs(text.c_str(), &h.g));
        } else {
            check(dc_graph_parse_edge_list(text.c_str(), &h.g));
        }
    }
    std::string sidecar = opt.input + ".meta.json";
    if (!dc_graph_has_meta(h.g) && std::filesystem::exists(sidecar)) {
        check(dc_graph_attach_meta_json(h.g, read_file(sidecar).c_str()));
    }
    return h;
}

// -o always receives the JSON report; --format only chooses how stdout reads.
void emit(const Opts& opt, const json& report, const std::string& text_render) {
    if (!opt.output.empty()) write_file(opt.output, report.dump(2) + "\n");
    if (opt.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << text_render;
    }
}

OrderHandle make_order(const Opts& opt, dc_graph* g) {
    if (opt.order_file.empty() == opt.strategy.empty()) {
        bail(2, "exactly one of --order and --strategy is required");
    }
    OrderHandle o;
    if (!opt.order_file.empty()) {
        check(dc_order_from_json(read_file(opt.order_file).c_str(), &o.o));
    } else {
        check(dc_order_compute(g, opt.strategy.c_str(), opt.t, opt.cap, &o.o));
    }
    return o;
}

int cmd_generate(const Opts& opt) {
    if (opt.gen.empty()) bail(2, "generate needs --gen");
    if (!opt.input.empty()) bail(2, "generate takes --gen, not --input");
    GraphHandle h;
    check(dc_graph_from_spec(opt.gen.c_str(), opt.seed, &h.g));
    bool has_meta = dc_graph_has_meta(h.g) != 0;
    json meta = nullptr;
    if (has_meta) {
        CStr m;
        check(dc_graph_meta_to_json(h.g, &m.s));
        meta = parse_json(m.s, "metadata");
    }
    if (opt.format == "json") {
        json graph = parse_json(graph_json_text(h.g), "graph");
        if (opt.output.empty()) {
            std::cout << json{{"graph", graph}, {"meta", meta}}.dump(2) << "\n";
        } else {
            write_file(opt.output, graph.dump(2) + "\n");
            if (has_meta) write_file(opt.output + ".meta.json", meta.dump(2) + "\n");
        }
    } else {
        CStr dimacs;
        check(dc_graph_write_dimacs(h.g, &dimacs.s));
        if (opt.output.empty()) {
            std::cout << dimacs.s;
            if (has_meta) {
                std::cerr << "note: structure metadata only lands in a sidecar when -o is given\n";
            }
        } else {
            write_file(opt.output, dimacs.s);
            if (has_meta) write_file(opt.output + ".meta.json", meta.dump(2) + "\n");
        }
    }
    return 0;
}

int cmd_order(const Opts& opt) {
    GraphHandle g = load_graph(opt);
    OrderHandle o;
    check(dc_order_compute(g.g, opt.strategy.c_str(), opt.t, opt.cap, &o.o));
    int width_t = dc_order_width(g.g, o.o, opt.t);
    int width_2 = dc_order_width(g.g, o.o, 2);
    if (width_t < 0 || width_2 < 0) bail(2, dc_last_error());
    CStr oj;
    check(dc_order_to_json(o.o, &oj.s));
    json report{{"strategy", opt.strategy},
                {"t", opt.t},
                {"method", dc_order_method(o.o)},
                {"width", width_t},
                {"width_2", width_2},
                {"order", parse_json(oj.s, "order")}};
    std::ostringstream text;
    text << "strategy: " << opt.strategy << " (" << dc_order_method(o.o) << ")\n"
         << "width(t=" << opt.t << "): " << width_t << "\n"
         << "width(t=2): " << width_2 << "\n"
         << "order: " << oj.s << "\n";
    emit(opt, report, text.str());
    return 0;
}

int cmd_color(const Opts& opt) {
    if (opt.r < 0) bail(2, "--r must be nonnegative");
    GraphHandle g = load_graph(opt);
    OrderHandle o = make_order(opt, g.g);
    ColoringHandle c;
    check(dc_greedy_color(g.g, o.o, opt.r, &c.c));
    int ok = 0;
    CStr rep;
    check(dc_verify(g.g, c.c, opt.r, &ok, &rep.s));
    int width_2 = dc_order_width(g.g, o.o, 2);
    if (width_2 < 0) bail(2, dc_last_error());
    json bound = nullptr;
    if (opt.r >= 1 && width_2 >= 1) bound = dc_theorem_bound(width_2, opt.r);
    CStr cj;
    check(dc_coloring_to_json(c.c, &cj.s));
    json report{{"r", opt.r},
                {"palette", dc_coloring_palette(c.c)},
                {"width_2", width_2},
                {"bound", bound},
                {"verified", ok == 1},
                {"coloring", parse_json(cj.s, "coloring")},
                {"report", parse_json(rep.s, "report")}};
    std::ostringstream text;
    text << "palette: " << dc_coloring_palette(c.c) << "\n"
         << "width(t=2): " << width_2 << "\n";
    if (!bound.is_null()) text << "bound (width_2, r): " << bound.get<int>() << "\n";
    text << "verified: " << (ok ? "yes" : "NO") << "\n";
    emit(opt, report, text.str());
    if (!ok) {
        std::cerr << "error: greedy produced an invalid coloring (implementation bug)\n";
        return 1;
    }
    return 0;
}

std::uint64_t resolve_budget(const Opts& opt) {
    if (opt.budget_given) return opt.budget;
    if (const char* env = std::getenv("DYNCHROMA_BUDGET")) {
        std::uint64_t value = 0;
        std::string s = env;
        try {
            size_t used = 0;
            value = std::stoull(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
        } catch (const std::exception&) {
            bail(2, "DYNCHROMA_BUDGET must be a nonnegative integer, got '" + s + "'");
        }
        return value;
    }
    return 0;
}

int cmd_exact(const Opts& opt) {
    if (opt.r < 0) bail(2, "--r must be nonnegative");
    GraphHandle g = load_graph(opt);
    std::uint64_t budget = resolve_budget(opt);
    int value = 0, lower = 0;
    std::uint64_t nodes = 0;
    ColoringHandle witness;
    dc_status st = dc_exact_chi_r(g.g, opt.r, opt.cap, budget, &value, &lower, &nodes, &witness.c);
    json report;
    std::ostringstream text;
    int code = 0;
    if (st == DC_OK) {
        CStr wj;
        check(dc_coloring_to_json(witness.c, &wj.s));
        report = json{{"r", opt.r},        {"status", "exact"}, {"value", value},
                      {"lower_bound", lower}, {"nodes", nodes},    {"witness", parse_json(wj.s, "witness")}};
        text << "chi_" << opt.r << " = " << value << " (" << nodes << " nodes)\n";
    } else if (st == DC_EBUDGET || st == DC_ECAP) {
        report = json{{"r", opt.r},
                      {"status", st == DC_EBUDGET ? "unknown" : "lower-bound-only"},
                      {"lower_bound", lower},
                      {"nodes", nodes}};
        text << "chi_" << opt.r << " >= " << lower << " (" << report["status"].get<std::string>()
             << ", " << nodes << " nodes)\n";
        code = 3;
    } else {
        bail(exit_code_for(st), dc_last_error());
    }
    emit(opt, report, text.str());
    if (code) std::cerr << "error: " << dc_last_error() << "\n";
    return code;
}

int cmd_check(const Opts& opt) {
    if (opt.r < 0) bail(2, "--r must be nonnegative");
    GraphHandle g = load_graph(opt);
    ColoringHandle c;
    check(dc_coloring_from_json(read_file(opt.coloring_file).c_str(), &c.c));
    int ok = 0;
    CStr rep;
    check(dc_verify(g.g, c.c, opt.r, &ok, &rep.s));
    json report = parse_json(rep.s, "report");
    std::ostringstream text;
    text << "ok: " << (ok ? "true" : "false") << "\n";
    for (const auto& pv : report["proper_violations"]) {
        text << "improper edge (" << pv["u"].get<int>() << ", " << pv["v"].get<int>() << ")\n";
    }
    for (const auto& dv : report["dynamic_violations"]) {
        text << "vertex " << dv["vertex"].get<int>() << " sees " << dv["seen_colors"].dump()
             << " but needs " << dv["required"].get<int>() << " colors\n";
    }
    emit(opt, report, text.str());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"r-dynamic colorings, vertex orders, and strong coloring numbers"};
    app.require_subcommand(1);
    Opts opt;

    auto add_common = [&](CLI::App* sc, bool with_input) {
        if (with_input) {
            sc->add_option("--input", opt.input, "graph file (DIMACS, edge list, or JSON)");
        }
        sc->add_option("--gen", opt.gen, "generator spec, e.g. subdivide:complete:5:1");
        sc->add_option("--seed", opt.seed, "default seed for generator specs");
        sc->add_option("-o,--output", opt.output, "write the JSON result (generate: the graph) here");
        sc->add_option("--format", opt.format, "stdout format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* generate = app.add_subcommand("generate", "build a graph from a generator spec");
    add_common(generate, false);

    CLI::App* order = app.add_subcommand("order", "compute a vertex order and its reach width");
    add_common(order, true);
    order->add_option("--strategy", opt.strategy,
                      "exact-dp | exact-brute | reverse-peo | product | subdivision | min-backreach")
        ->required();
    order->add_option("--t", opt.t, "reach radius (default 2)");
    order->add_option("--cap", opt.cap, "size cap for the exact strategies");

    CLI::App* color = app.add_subcommand("color", "greedy r-dynamic coloring along an order");
    add_common(color, true);
    color->add_option("--order", opt.order_file, "order file (JSON array)");
    color->add_option("--strategy", opt.strategy, "compute the order instead of loading one");
    color->add_option("--r", opt.r, "dynamic requirement")->required();
    color->add_option("--t", opt.t, "reach radius for --strategy (default 2)");
    color->add_option("--cap", opt.cap, "size cap for exact strategies");

    CLI::App* exact = app.add_subcommand("exact", "exact r-dynamic chromatic number");
    add_common(exact, true);
    exact->add_option("--r", opt.r, "dynamic requirement")->required();
    exact->add_option("--cap", opt.cap, "largest palette to try (default max degree squared + 1)");
    CLI::Option* budget_opt = exact->add_option("--budget", opt.budget, "search node budget");

    CLI::App* chk = app.add_subcommand("check", "verify a coloring file against a graph");
    add_common(chk, true);
    chk->add_option("--coloring", opt.coloring_file, "coloring file (JSON)")->required();
    chk->add_option("--r", opt.r, "dynamic requirement")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    opt.budget_given = budget_opt->count() > 0;

    try {
        if (generate->parsed()) return cmd_generate(opt);
        if (order->parsed()) return cmd_order(opt);
        if (color->parsed()) return cmd_color(opt);
        if (exact->parsed()) return cmd_exact(opt);
        if (chk->parsed()) return cmd_check(opt);
    } catch (const CliError& err) {
        std::cerr << "error: " << err.message << "\n";
        return err.code;
    }
    return 2;
}
