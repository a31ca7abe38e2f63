#ifndef CHROMHOM_H
#define CHROMHOM_H

/* C interface to libchromhom. Every function returns a chromhom_status;
 * on failure chromhom_last_error() describes the problem (thread-local).
 * Strings returned through char** are owned by the caller and released
 * with chromhom_string_free. */

#if defined(_WIN32)
#define CHROMHOM_API __declspec(dllexport)
#else
#define CHROMHOM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chromhom_status {
  CHROMHOM_OK = 0,
  CHROMHOM_ERR_PARSE = 1,
  CHROMHOM_ERR_INVALID_ARGUMENT = 2,
  CHROMHOM_ERR_NOT_IN_SPAN = 3,
  CHROMHOM_ERR_NON_INTEGER = 4,
  CHROMHOM_ERR_COMPLEX_NOT_EXACT = 5,
  CHROMHOM_ERR_DIMENSION_MISMATCH = 6,
  CHROMHOM_ERR_NOT_A_SUBGRAPH = 7,
  CHROMHOM_ERR_PLANAR_INPUT = 8,
  CHROMHOM_ERR_LIFT_FAILED = 9,
  CHROMHOM_ERR_SIZE_BOUND = 10,
  CHROMHOM_ERR_INVARIANT = 11,
  CHROMHOM_ERR_INTERNAL = 12
} chromhom_status;

typedef enum chromhom_format { CHROMHOM_EDGE_LIST = 0, CHROMHOM_GRAPH6 = 1 } chromhom_format;

typedef struct chromhom_graph chromhom_graph;

CHROMHOM_API const char* chromhom_status_string(chromhom_status status);
CHROMHOM_API const char* chromhom_last_error(void);
CHROMHOM_API void chromhom_string_free(char* s);

/* Graphs. Parsing keeps the raw multigraph; loops and repeated edges are
 * collapsed into a simple graph and reported by chromhom_graph_normalization. */
CHROMHOM_API chromhom_status chromhom_graph_parse(const char* text, chromhom_format format, chromhom_graph** out);
/* endpoints holds 2 * edge_count vertex labels in 1..n. */
CHROMHOM_API chromhom_status chromhom_graph_from_edges(int n, const int* endpoints, int edge_count,
                                                       chromhom_graph** out);
CHROMHOM_API void chromhom_graph_free(chromhom_graph* g);
CHROMHOM_API int chromhom_graph_vertex_count(const chromhom_graph* g);
CHROMHOM_API int chromhom_graph_edge_count(const chromhom_graph* g);
CHROMHOM_API chromhom_status chromhom_graph_normalization(const chromhom_graph* g, int* had_loop,
                                                          int* collapsed_multiedges);
CHROMHOM_API chromhom_status chromhom_graph_to_graph6(const chromhom_graph* g, char** out);
CHROMHOM_API chromhom_status chromhom_graph_is_planar(const chromhom_graph* g, int* planar);

/* Homology of the restricted complexes as JSON. k >= 1 scans one shape;
 * k == 0 scans every 2 <= k <= n/2. */
CHROMHOM_API chromhom_status chromhom_homology_json(const chromhom_graph* g, int k, char** out);

/* Torsion certificate for a non-planar graph (CHROMHOM_ERR_PLANAR_INPUT
 * otherwise). */
CHROMHOM_API chromhom_status chromhom_certify_json(const chromhom_graph* g, char** out);

/* Re-verifies a certificate document from scratch. graph may be NULL to use
 * the document's own graph. *valid receives 1 or 0; verdict_json (optional)
 * the three checks. */
CHROMHOM_API chromhom_status chromhom_check_json(const char* certificate_json, const chromhom_graph* graph,
                                                 int* valid, char** verdict_json);

/* One survey record; certificate_json (optional) receives the certificate
 * document, or "null" for planar graphs. */
CHROMHOM_API chromhom_status chromhom_survey_record_json(const chromhom_graph* g, int all_shapes, char** record_json,
                                                         char** certificate_json);

/* Worked-example battery. mutate != 0 flips the edge sign convention. */
CHROMHOM_API chromhom_status chromhom_reproduction_battery_json(int mutate, char** out, int* all_pass);

/* All connected graphs on n <= 7 vertices up to isomorphism, one graph6
 * string per line. */
CHROMHOM_API chromhom_status chromhom_connected_graphs_graph6(int n, char** out);

#ifdef __cplusplus
}
#endif

#endif
