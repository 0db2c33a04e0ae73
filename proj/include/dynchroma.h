/* C interface to the dynchroma library.
 *
 * All functions return a dc_status unless noted.  On failure the handle and
 * out-parameters are left untouched and dc_last_error() describes what went
 * wrong (thread-local).  Strings returned through char** out-parameters are
 * malloc'd; release them with dc_string_free.
 */

#ifndef DYNCHROMA_H
#define DYNCHROMA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dc_status {
    DC_OK = 0,
    DC_EINVAL = 1,   /* bad argument or malformed structure */
    DC_EPARSE = 2,   /* unparseable input text */
    DC_ECAP = 3,     /* instance larger than the solver cap */
    DC_EBUDGET = 4,  /* search budget exhausted before an exact answer */
    DC_ENOMETA = 5,  /* operation needs structure metadata the graph lacks */
    DC_ENOMEM = 6
} dc_status;

typedef struct dc_graph dc_graph;
typedef struct dc_order dc_order;
typedef struct dc_coloring dc_coloring;

const char* dc_last_error(void);
void dc_string_free(char* s);

/* ---- graphs ---- */

dc_status dc_graph_build(int n, const int* edge_u, const int* edge_v,
                         size_t edge_count, dc_graph** out);
dc_status dc_graph_from_spec(const char* spec, uint64_t default_seed,
                             dc_graph** out);
dc_status dc_graph_parse_dimacs(const char* text, dc_graph** out);
dc_status dc_graph_parse_edge_list(const char* text, dc_graph** out);
dc_status dc_graph_from_json(const char* text, dc_graph** out);
void dc_graph_free(dc_graph* g);

int dc_graph_vertex_count(const dc_graph* g);
int dc_graph_edge_count(const dc_graph* g);
int dc_graph_max_degree(const dc_graph* g);
int dc_graph_has_meta(const dc_graph* g);

dc_status dc_graph_write_dimacs(const dc_graph* g, char** out);
dc_status dc_graph_to_json(const dc_graph* g, char** out);
dc_status dc_graph_meta_to_json(const dc_graph* g, char** out);
dc_status dc_graph_attach_meta_json(dc_graph* g, const char* meta_text);
dc_status dc_graph_square(const dc_graph* g, dc_graph** out);

/* ---- orders and coloring numbers ---- */

/* strategy: "reverse-peo" | "product" | "subdivision" | "min-backreach" |
 * "exact-dp" | "exact-brute".  Structural strategies need matching metadata.
 * cap <= 0 picks the solver default. */
dc_status dc_order_compute(const dc_graph* g, const char* strategy, int t,
                           int cap, dc_order** out);
dc_status dc_order_from_json(const char* text, dc_order** out);
void dc_order_free(dc_order* o);

dc_status dc_order_to_json(const dc_order* o, char** out);
int dc_order_size(const dc_order* o);
/* -1 if the order does not fit the graph */
int dc_order_width(const dc_graph* g, const dc_order* o, int t);
/* "exact-dp" | "exact-bruteforce" | "upper-bound-only" | "loaded" */
const char* dc_order_method(const dc_order* o);
/* width achieved by the order at the t it was computed for; 0 for loaded
 * orders that never saw a graph */
int dc_order_value(const dc_order* o);
int dc_order_t(const dc_order* o);

/* ---- colorings ---- */

dc_status dc_greedy_color(const dc_graph* g, const dc_order* o, int r,
                          dc_coloring** out);
dc_status dc_coloring_from_json(const char* text, dc_coloring** out);
void dc_coloring_free(dc_coloring* c);

dc_status dc_coloring_to_json(const dc_coloring* c, char** out);
int dc_coloring_size(const dc_coloring* c);
int dc_coloring_palette(const dc_coloring* c);
int dc_coloring_color(const dc_coloring* c, int v);

/* A failed verification is not an error: returns DC_OK with *ok = 0 and a
 * JSON report in *report_json (pass NULL to skip the report). */
dc_status dc_verify(const dc_graph* g, const dc_coloring* c, int r, int* ok,
                    char** report_json);

/* ---- exact chromatic numbers ---- */

/* Runs to an exact answer or returns DC_EBUDGET/DC_ECAP with *lower_bound
 * set to the best proven bound.  witness may be NULL.  budget 0 picks the
 * default node budget. */
dc_status dc_exact_chi_r(const dc_graph* g, int r, int color_cap,
                         uint64_t node_budget, int* value, int* lower_bound,
                         uint64_t* nodes_used, dc_coloring** witness);
dc_status dc_chi_two_distance(const dc_graph* g, uint64_t node_budget,
                              int* value);

int dc_theorem_bound(int k, int r);

#ifdef __cplusplus
}
#endif

#endif /* DYNCHROMA_H */
