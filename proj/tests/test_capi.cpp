#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "dynchroma.h"

using nlohmann::json;

namespace {

struct G {
    dc_graph* g = nullptr;
    ~G() { dc_graph_free(g); }
};
struct O {
    dc_order* o = nullptr;
    ~O() { dc_order_free(o); }
};
struct C {
    dc_coloring* c = nullptr;
    ~C() { dc_coloring_free(c); }
};
struct S {
    char* s = nullptr;
    ~S() { dc_string_free(s); }
};

}  // namespace

TEST_CASE("c api graph lifecycle") {
    int us[] = {0, 1, 2};
    int vs[] = {1, 2, 0};
    G k3;
    REQUIRE(dc_graph_build(3, us, vs, 3, &k3.g) == DC_OK);
    CHECK(dc_graph_vertex_count(k3.g) == 3);
    CHECK(dc_graph_edge_count(k3.g) == 3);
    CHECK(dc_graph_max_degree(k3.g) == 2);
    CHECK(dc_graph_has_meta(k3.g) == 0);

    S dimacs;
    REQUIRE(dc_graph_write_dimacs(k3.g, &dimacs.s) == DC_OK);
    CHECK(std::string(dimacs.s) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");

    G reparsed;
    REQUIRE(dc_graph_parse_dimacs(dimacs.s, &reparsed.g) == DC_OK);
    CHECK(dc_graph_edge_count(reparsed.g) == 3);

    SUBCASE("build rejects self-loops with a message") {
        int u = 1, v = 1;
        G bad;
        CHECK(dc_graph_build(3, &u, &v, 1, &bad.g) == DC_EINVAL);
        CHECK(bad.g == nullptr);
        CHECK(std::string(dc_last_error()).find("self-loop") != std::string::npos);
    }
    SUBCASE("parse errors carry line info") {
        G bad;
        CHECK(dc_graph_parse_dimacs("p edge 2 1\ne 1 9\n", &bad.g) == DC_EPARSE);
        CHECK(std::string(dc_last_error()).find("line 2") != std::string::npos);
    }
    SUBCASE("null arguments are invalid, not fatal") {
        CHECK(dc_graph_build(2, nullptr, nullptr, 1, nullptr) == DC_EINVAL);
        CHECK(dc_graph_write_dimacs(nullptr, &dimacs.s) == DC_EINVAL);
        dc_graph_free(nullptr);
        dc_order_free(nullptr);
        dc_coloring_free(nullptr);
        dc_string_free(nullptr);
    }
}

TEST_CASE("c api generator specs and metadata") {
    G sub;
    REQUIRE(dc_graph_from_spec("subdivide:complete:5:1", 1, &sub.g) == DC_OK);
    CHECK(dc_graph_vertex_count(sub.g) == 15);
    CHECK(dc_graph_has_meta(sub.g) == 1);

    S meta;
    REQUIRE(dc_graph_meta_to_json(sub.g, &meta.s) == DC_OK);
    CHECK(json::parse(meta.s)["kind"] == "subdivision");

    SUBCASE("metadata survives a json round trip") {
        S gj;
        REQUIRE(dc_graph_to_json(sub.g, &gj.s) == DC_OK);
        G rebuilt;
        REQUIRE(dc_graph_from_json(gj.s, &rebuilt.g) == DC_OK);
        CHECK(dc_graph_has_meta(rebuilt.g) == 0);
        REQUIRE(dc_graph_attach_meta_json(rebuilt.g, meta.s) == DC_OK);
        CHECK(dc_graph_has_meta(rebuilt.g) == 1);
        O o;
        CHECK(dc_order_compute(rebuilt.g, "subdivision", 2, 0, &o.o) == DC_OK);
        CHECK(dc_order_width(rebuilt.g, o.o, 2) == 5);
    }
    SUBCASE("mismatched metadata is rejected") {
        G k3;
        REQUIRE(dc_graph_from_spec("complete:3", 1, &k3.g) == DC_OK);
        CHECK(dc_graph_attach_meta_json(k3.g, meta.s) == DC_EINVAL);
    }
    SUBCASE("bad specs") {
        G bad;
        CHECK(dc_graph_from_spec("complete:none", 1, &bad.g) == DC_EINVAL);
        CHECK(dc_graph_from_spec("frobnicate:3", 1, &bad.g) == DC_EINVAL);
        CHECK(std::string(dc_last_error()).find("frobnicate") != std::string::npos);
    }
    SUBCASE("ktree specs are seed deterministic") {
        G a, b;
        REQUIRE(dc_graph_from_spec("ktree:2:8", 42, &a.g) == DC_OK);
        REQUIRE(dc_graph_from_spec("ktree:2:8:42", 7, &b.g) == DC_OK);
        S ja, jb;
        REQUIRE(dc_graph_to_json(a.g, &ja.s) == DC_OK);
        REQUIRE(dc_graph_to_json(b.g, &jb.s) == DC_OK);
        CHECK(std::string(ja.s) == std::string(jb.s));
    }
}

TEST_CASE("c api orders") {
    G c5;
    REQUIRE(dc_graph_from_spec("cycle:5", 1, &c5.g) == DC_OK);

    O dp;
    REQUIRE(dc_order_compute(c5.g, "exact-dp", 2, 0, &dp.o) == DC_OK);
    CHECK(dc_order_value(dp.o) == 3);
    CHECK(dc_order_t(dp.o) == 2);
    CHECK(std::string(dc_order_method(dp.o)) == "exact-dp");
    CHECK(dc_order_width(c5.g, dp.o, 2) == 3);
    CHECK(dc_order_size(dp.o) == 5);

    O brute;
    REQUIRE(dc_order_compute(c5.g, "exact-brute", 2, 0, &brute.o) == DC_OK);
    CHECK(dc_order_value(brute.o) == 3);
    CHECK(std::string(dc_order_method(brute.o)) == "exact-bruteforce");

    O mb;
    REQUIRE(dc_order_compute(c5.g, "min-backreach", 2, 0, &mb.o) == DC_OK);
    CHECK(std::string(dc_order_method(mb.o)) == "upper-bound-only");

    SUBCASE("json round trip") {
        S oj;
        REQUIRE(dc_order_to_json(dp.o, &oj.s) == DC_OK);
        O loaded;
        REQUIRE(dc_order_from_json(oj.s, &loaded.o) == DC_OK);
        CHECK(dc_order_size(loaded.o) == 5);
        CHECK(std::string(dc_order_method(loaded.o)) == "loaded");
        CHECK(dc_order_width(c5.g, loaded.o, 2) == 3);
    }
    SUBCASE("structural strategies demand metadata") {
        CHECK(dc_order_compute(c5.g, "reverse-peo", 2, 0, &mb.o) == DC_ENOMETA);
        CHECK(std::string(dc_last_error()).find("reverse-peo") != std::string::npos);
        CHECK(dc_order_compute(c5.g, "product", 2, 0, &mb.o) == DC_ENOMETA);
    }
    SUBCASE("unknown strategy") {
        O o;
        CHECK(dc_order_compute(c5.g, "magic", 2, 0, &o.o) == DC_EINVAL);
    }
    SUBCASE("caps map to DC_ECAP") {
        G big;
        REQUIRE(dc_graph_from_spec("ktree:1:12", 3, &big.g) == DC_OK);
        O o;
        CHECK(dc_order_compute(big.g, "exact-brute", 1, 0, &o.o) == DC_ECAP);
    }
    SUBCASE("misfit order width is -1") {
        G k2;
        REQUIRE(dc_graph_from_spec("complete:2", 1, &k2.g) == DC_OK);
        CHECK(dc_order_width(k2.g, dp.o, 1) == -1);
    }
    SUBCASE("reverse-peo works with ktree metadata") {
        G kt;
        REQUIRE(dc_graph_from_spec("ktree:2:9:5", 1, &kt.g) == DC_OK);
        O o;
        REQUIRE(dc_order_compute(kt.g, "reverse-peo", 3, 0, &o.o) == DC_OK);
        int w = dc_order_width(kt.g, o.o, 3);
        CHECK(w >= 1);
        CHECK(w <= 3);
    }
}

TEST_CASE("c api coloring round trip") {
    G sub;
    REQUIRE(dc_graph_from_spec("subdivide:complete:5:1", 1, &sub.g) == DC_OK);
    O ord;
    REQUIRE(dc_order_compute(sub.g, "subdivision", 2, 0, &ord.o) == DC_OK);
    C col;
    REQUIRE(dc_greedy_color(sub.g, ord.o, 2, &col.c) == DC_OK);
    CHECK(dc_coloring_size(col.c) == 15);
    CHECK(dc_coloring_palette(col.c) <= dc_theorem_bound(5, 2));

    int ok = -1;
    S report;
    REQUIRE(dc_verify(sub.g, col.c, 2, &ok, &report.s) == DC_OK);
    CHECK(ok == 1);
    CHECK(json::parse(report.s)["ok"] == true);

    SUBCASE("colors are exposed individually") {
        for (int v = 0; v < 15; ++v) {
            int c = dc_coloring_color(col.c, v);
            CHECK(c >= 1);
            CHECK(c <= dc_coloring_palette(col.c));
        }
        CHECK(dc_coloring_color(col.c, 99) == -1);
    }
    SUBCASE("failed verification is DC_OK with ok = 0") {
        C mono;
        REQUIRE(dc_coloring_from_json("[1, 1, 1]", &mono.c) == DC_OK);
        G k3;
        REQUIRE(dc_graph_from_spec("complete:3", 1, &k3.g) == DC_OK);
        int ok2 = -1;
        S rep2;
        REQUIRE(dc_verify(k3.g, mono.c, 0, &ok2, &rep2.s) == DC_OK);
        CHECK(ok2 == 0);
        json parsed = json::parse(rep2.s);
        CHECK(parsed["ok"] == false);
        CHECK(parsed["proper_violations"].size() == 3);
    }
    SUBCASE("coloring json accepts both shapes") {
        C a, b;
        REQUIRE(dc_coloring_from_json("[2, 1]", &a.c) == DC_OK);
        REQUIRE(dc_coloring_from_json("{\"colors\": [2, 1], \"palette\": 2}", &b.c) == DC_OK);
        CHECK(dc_coloring_palette(a.c) == 2);
        CHECK(dc_coloring_palette(b.c) == 2);
        CHECK(dc_coloring_from_json("{\"colors\": [2, 1], \"palette\": 9}", &b.c) == DC_EINVAL);
        CHECK(dc_coloring_from_json("not json at all", &b.c) == DC_EPARSE);
    }
}

TEST_CASE("c api exact solvers") {
    G k4;
    REQUIRE(dc_graph_from_spec("complete:4", 1, &k4.g) == DC_OK);
    int value = 0, lower = 0;
    uint64_t nodes = 0;
    C witness;
    REQUIRE(dc_exact_chi_r(k4.g, 0, 0, 0, &value, &lower, &nodes, &witness.c) == DC_OK);
    CHECK(value == 4);
    CHECK(lower == 4);
    CHECK(nodes > 0);
    CHECK(dc_coloring_palette(witness.c) == 4);

    SUBCASE("budget exhaustion surfaces as DC_EBUDGET") {
        G k7;
        REQUIRE(dc_graph_from_spec("complete:7", 1, &k7.g) == DC_OK);
        int v2 = -7, l2 = 0;
        uint64_t n2 = 0;
        CHECK(dc_exact_chi_r(k7.g, 2, 0, 4, &v2, &l2, &n2, nullptr) == DC_EBUDGET);
        CHECK(v2 == -7);  // untouched on failure
        CHECK(l2 >= 3);
        CHECK(n2 >= 4);
        CHECK(std::string(dc_last_error()).find("budget") != std::string::npos);
    }
    SUBCASE("color caps surface as DC_ECAP") {
        int v2 = 0, l2 = 0;
        uint64_t n2 = 0;
        CHECK(dc_exact_chi_r(k4.g, 0, 2, 0, &v2, &l2, &n2, nullptr) == DC_ECAP);
        CHECK(l2 == 3);
    }
    SUBCASE("two-distance chromatic number") {
        G p4;
        REQUIRE(dc_graph_from_spec("path:4", 1, &p4.g) == DC_OK);
        int v2 = 0;
        REQUIRE(dc_chi_two_distance(p4.g, 0, &v2) == DC_OK);
        CHECK(v2 == 3);
        G sq;
        REQUIRE(dc_graph_square(p4.g, &sq.g) == DC_OK);
        CHECK(dc_graph_edge_count(sq.g) == 5);
    }
}

TEST_CASE("c api theorem bound") {
    CHECK(dc_theorem_bound(3, 2) == 5);
    CHECK(dc_theorem_bound(5, 1) == 5);
    CHECK(dc_theorem_bound(0, 2) == -1);
    CHECK(std::string(dc_last_error()).find("at least 1") != std::string::npos);
}
