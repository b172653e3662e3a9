#ifndef RDISC_H
#define RDISC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RD_API __declspec(dllexport)
#else
#define RD_API __attribute__((visibility("default")))
#endif

typedef enum rd_status {
  RD_OK = 0,
  RD_ERR_PARSE = 1,      /* malformed graph6, edge list or coloring text */
  RD_ERR_PARAM = 2,      /* argument outside its documented range */
  RD_ERR_SIZE = 3,       /* input exceeds a size cap */
  RD_ERR_STRUCTURE = 4,  /* e.g. disconnected graph where connected is required */
  RD_ERR_BUDGET = 5,     /* search ran out of its node budget */
  RD_ERR_IO = 6,
  RD_ERR_INTERNAL = 7
} rd_status;

typedef struct rd_graph rd_graph;
typedef struct rd_coloring rd_coloring;
typedef struct rd_result rd_result;

/* Message for the last failing call on this thread; never NULL. */
RD_API const char* rd_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
RD_API void rd_string_free(char* s);

/* ---- graphs ---- */

RD_API rd_status rd_graph_from_graph6(const char* text, rd_graph** out);
RD_API rd_status rd_graph_from_edge_list(const char* text, rd_graph** out);
/* Edge list when the first non-empty line is two integers, graph6 otherwise. */
RD_API rd_status rd_graph_parse(const char* text, rd_graph** out);
/* edges holds m pairs (u0, v0, u1, v1, ...). */
RD_API rd_status rd_graph_from_edges(int n, const int* edges, size_t m, rd_graph** out);
RD_API void rd_graph_free(rd_graph* g);

RD_API int rd_graph_order(const rd_graph* g);
RD_API int rd_graph_size(const rd_graph* g);
/* Edge i in canonical order (sorted, u < v). */
RD_API rd_status rd_graph_edge(const rd_graph* g, int i, int* u, int* v);
RD_API rd_status rd_graph_to_graph6(const rd_graph* g, char** out);
RD_API rd_status rd_graph_to_edge_list(const rd_graph* g, char** out);
RD_API rd_status rd_graph_complement(const rd_graph* g, rd_graph** out);

typedef struct rd_stats {
  int n;
  int m;
  int min_degree;
  int max_degree;
  int connected;
  int bipartite;
  int regular;
} rd_stats;

RD_API rd_status rd_graph_stats(const rd_graph* g, rd_stats* out);

/* ---- connectivity and edge colouring ---- */

RD_API rd_status rd_edge_connectivity(const rd_graph* g, int* out);
RD_API rd_status rd_upper_edge_connectivity(const rd_graph* g, int* out);
RD_API rd_status rd_local_edge_connectivity(const rd_graph* g, int u, int v, int* out);
/* class_out is 1 or 2. */
RD_API rd_status rd_chromatic_index(const rd_graph* g, uint64_t budget, int* out, int* class_out);

/* ---- rd ---- */

/* Every applicable bound, one line each, plus the aggregated window. */
RD_API rd_status rd_bounds_report(const rd_graph* g, uint64_t budget, int* lower, int* upper,
                                  char** text);

/* edge_cap <= 0 selects the default cap of 15 edges. */
RD_API rd_status rd_exact(const rd_graph* g, uint64_t budget, int edge_cap, rd_result** out);
RD_API void rd_result_free(rd_result* r);
RD_API int rd_result_value(const rd_result* r);
RD_API int rd_result_lower(const rd_result* r);
RD_API int rd_result_upper(const rd_result* r);
RD_API uint64_t rd_result_nodes(const rd_result* r);
/* Borrowed strings, valid while r lives. */
RD_API const char* rd_result_construction(const rd_result* r);
RD_API const char* rd_result_note(const rd_result* r);
/* Copy of the optimal colouring. */
RD_API rd_status rd_result_coloring(const rd_result* r, rd_coloring** out);
/* One certificate line per vertex pair. */
RD_API rd_status rd_result_certificates(const rd_result* r, char** out);

/* ---- colourings ---- */

/* Verified rainbow disconnection colouring; construction name is borrowed. */
RD_API rd_status rd_construct_coloring(const rd_graph* g, uint64_t budget, rd_coloring** out);
RD_API const char* rd_coloring_construction(const rd_coloring* c);
RD_API rd_status rd_coloring_from_colors(const rd_graph* g, const int* colors, size_t m,
                                         rd_coloring** out);
RD_API rd_status rd_coloring_parse(const rd_graph* g, const char* text, rd_coloring** out);
RD_API void rd_coloring_free(rd_coloring* c);
RD_API int rd_coloring_palette(const rd_coloring* c);
RD_API int rd_coloring_color(const rd_coloring* c, int edge);
RD_API rd_status rd_coloring_to_text(const rd_coloring* c, char** out);

/* ok is 1 when every pair has a rainbow cut. report lists certificates when
 * ok and the first pair without one otherwise. */
RD_API rd_status rd_verify(const rd_coloring* c, int* ok, char** report);

/* ---- constructions ---- */

RD_API rd_status rd_construct_extremal(int n, int k, rd_coloring** out, int* expected_rd);
RD_API rd_status rd_construct_ng_sharp(int n, rd_graph** out);
/* The graph a colouring belongs to, as a new handle. */
RD_API rd_status rd_coloring_graph(const rd_coloring* c, rd_graph** out);

/* ---- survey ---- */

typedef struct rd_survey_config {
  int exhaustive_n;        /* > 0: enumerate connected graphs of this order */
  const char* input_path;  /* otherwise read graph6 lines from this file */
  const char* rules;       /* comma-separated ids or prefixes; NULL or "" = all */
  uint64_t budget;         /* 0 selects the default */
  int edge_cap;            /* <= 0 selects the default */
  int jobs;                /* <= 0 means 1 */
  int has_seed;
  uint64_t seed;
} rd_survey_config;

/* report receives RULE, VIOLATION and WITNESS lines; skipped_detail lists
 * checks that hit a cap (may be NULL). */
RD_API rd_status rd_survey(const rd_survey_config* config, char** report, size_t* violations,
                           char** skipped_detail);

#ifdef __cplusplus
}
#endif

#endif
