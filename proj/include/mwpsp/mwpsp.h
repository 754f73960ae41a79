/*
 * mwpsp: maximal planar graph moves and maximum-weight planar subgraph solvers.
 *
 * C interface over opaque handles. Every fallible call returns an
 * mwpsp_status; on failure mwpsp_last_error() describes the problem for the
 * calling thread. Handles are immutable once created and may be shared
 * between threads. Strings returned through char** are owned by the caller
 * and released with mwpsp_string_free(). Vertex ids are 1-based.
 */
#ifndef MWPSP_MWPSP_H
#define MWPSP_MWPSP_H

#include <stddef.h>
#include <stdint.h>

#if defined(MWPSP_BUILDING)
#define MWPSP_API __attribute__((visibility("default")))
#else
#define MWPSP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mwpsp_status {
  MWPSP_OK = 0,
  MWPSP_ERR_INVALID_ARGUMENT = 1,
  MWPSP_ERR_PARSE = 2,
  MWPSP_ERR_DUPLICATE_EDGE = 3,
  MWPSP_ERR_INDEX_OUT_OF_RANGE = 4,
  MWPSP_ERR_EULER_VIOLATION = 5,
  MWPSP_ERR_NON_MANIFOLD = 6,
  MWPSP_ERR_NOT_PLANAR = 7,
  MWPSP_ERR_DISCONNECTED = 8,
  MWPSP_ERR_DUPLICATE_FACE = 9,
  MWPSP_ERR_INVALID_FACE = 10,
  MWPSP_ERR_VERTEX_OUT_OF_RANGE = 11,
  MWPSP_ERR_EDGE_NOT_PRESENT = 12,
  MWPSP_ERR_FACE_NOT_PRESENT = 13,
  MWPSP_ERR_DEGREE_NOT_3 = 14,
  MWPSP_ERR_TOO_SMALL = 15,
  MWPSP_ERR_SIZE_MISMATCH = 16,
  MWPSP_ERR_NO_PATH = 17,
  MWPSP_ERR_INTERNAL_CONTRADICTION = 18,
  MWPSP_ERR_NO_FEASIBLE = 19,
  MWPSP_ERR_N_OUT_OF_RANGE = 20,
  MWPSP_ERR_BUDGET_EXCEEDED = 21,
  MWPSP_ERR_SEARCH_EXHAUSTED = 22,
  MWPSP_ERR_INTERNAL = 99
} mwpsp_status;

typedef enum mwpsp_improve {
  MWPSP_IMPROVE_NONE = 0,
  MWPSP_IMPROVE_STEEPEST = 1,
  MWPSP_IMPROVE_FIRST = 2,
  MWPSP_IMPROVE_ANNEAL = 3
} mwpsp_improve;

typedef struct mwpsp_triangulation mwpsp_triangulation;
typedef struct mwpsp_instance mwpsp_instance;
typedef struct mwpsp_sequence mwpsp_sequence;
typedef struct mwpsp_tree mwpsp_tree;
typedef struct mwpsp_report mwpsp_report;

/* Default search budget (triangulations visited) and optima cap. */
#define MWPSP_DEFAULT_BUDGET 50000000ULL
#define MWPSP_DEFAULT_CAP 100000

MWPSP_API const char* mwpsp_version(void);
MWPSP_API const char* mwpsp_status_name(mwpsp_status status);
/* Nonzero for the resource guards: n out of range, budget exceeded, search exhausted. */
MWPSP_API int mwpsp_status_is_resource_limit(mwpsp_status status);
MWPSP_API const char* mwpsp_last_error(void);
MWPSP_API void mwpsp_string_free(char* s);

/* ---- triangulations ---------------------------------------------------- */

/* {"n": N, "faces": [[a,b,c], ...]}, fully validated. */
MWPSP_API mwpsp_status mwpsp_triangulation_from_json(const char* json, mwpsp_triangulation** out);
/* `corners` holds 3 * face_count ids. */
MWPSP_API mwpsp_status mwpsp_triangulation_from_faces(uint32_t n, const uint32_t* corners,
                                                      size_t face_count, mwpsp_triangulation** out);
/* Maximal planar edge set (2 * edge_count ids); faces are recovered. */
MWPSP_API mwpsp_status mwpsp_triangulation_from_edges(uint32_t n, const uint32_t* pairs,
                                                      size_t edge_count, mwpsp_triangulation** out);
MWPSP_API mwpsp_status mwpsp_triangulation_stacked(uint32_t n, mwpsp_triangulation** out);
MWPSP_API void mwpsp_triangulation_free(mwpsp_triangulation* t);

MWPSP_API uint32_t mwpsp_triangulation_vertex_count(const mwpsp_triangulation* t);
MWPSP_API size_t mwpsp_triangulation_edge_count(const mwpsp_triangulation* t);
MWPSP_API size_t mwpsp_triangulation_face_count(const mwpsp_triangulation* t);
/* Fills 2 * edge_count ids, lexicographic. */
MWPSP_API mwpsp_status mwpsp_triangulation_edges(const mwpsp_triangulation* t, uint32_t* pairs);
/* Fills 3 * face_count ids, lexicographic. */
MWPSP_API mwpsp_status mwpsp_triangulation_faces(const mwpsp_triangulation* t, uint32_t* corners);
MWPSP_API mwpsp_status mwpsp_triangulation_degree(const mwpsp_triangulation* t, uint32_t v,
                                                  size_t* out);
/* Cyclic neighbor order of v; `capacity` must be at least the degree. */
MWPSP_API mwpsp_status mwpsp_triangulation_link(const mwpsp_triangulation* t, uint32_t v,
                                                uint32_t* out, size_t capacity, size_t* length);
/* Third corners of the two faces on {a,b}, ascending. */
MWPSP_API mwpsp_status mwpsp_triangulation_opposite(const mwpsp_triangulation* t, uint32_t a,
                                                    uint32_t b, uint32_t out[2]);
/* 1 when edge and face sets agree. */
MWPSP_API int mwpsp_triangulation_equal(const mwpsp_triangulation* a, const mwpsp_triangulation* b);
MWPSP_API mwpsp_status mwpsp_triangulation_to_json(const mwpsp_triangulation* t, char** out);
MWPSP_API mwpsp_status mwpsp_triangulation_to_dot(const mwpsp_triangulation* t, char** out);
MWPSP_API mwpsp_status mwpsp_triangulation_canonical_key(const mwpsp_triangulation* t, char** out);
/* Exact decimal weight of t under the instance. */
MWPSP_API mwpsp_status mwpsp_triangulation_weight(const mwpsp_triangulation* t,
                                                  const mwpsp_instance* instance, char** out);

/* ---- instances --------------------------------------------------------- */

/* Text format: "n <N>" then "u v w" lines with u < v; '#' comments. */
MWPSP_API mwpsp_status mwpsp_instance_parse(const char* text, mwpsp_instance** out);
MWPSP_API mwpsp_status mwpsp_instance_counterexample(mwpsp_instance** out);
MWPSP_API void mwpsp_instance_free(mwpsp_instance* instance);
MWPSP_API uint32_t mwpsp_instance_vertex_count(const mwpsp_instance* instance);
MWPSP_API mwpsp_status mwpsp_instance_weight(const mwpsp_instance* instance, uint32_t u, uint32_t v,
                                             char** out);
MWPSP_API mwpsp_status mwpsp_instance_to_text(const mwpsp_instance* instance, char** out);

/* "u v" lines, one edge each; '#' comments. *pairs receives 2 * *count ids
 * and is released with mwpsp_pairs_free(). */
MWPSP_API mwpsp_status mwpsp_edge_list_parse(const char* text, uint32_t** pairs, size_t* count);
MWPSP_API void mwpsp_pairs_free(uint32_t* pairs);

/* ---- moves ------------------------------------------------------------- */

/* `added` (nullable) receives the inserted edge. */
MWPSP_API mwpsp_status mwpsp_edge_substitute(const mwpsp_triangulation* t, uint32_t a, uint32_t b,
                                             mwpsp_triangulation** out, uint32_t added[2]);
MWPSP_API mwpsp_status mwpsp_vertex_relocate(const mwpsp_triangulation* t, uint32_t u,
                                             const uint32_t face[3], mwpsp_triangulation** out);
/* Edge substitutions equivalent to mwpsp_vertex_relocate. */
MWPSP_API mwpsp_status mwpsp_relocation_as_flips(const mwpsp_triangulation* t, uint32_t u,
                                                 const uint32_t face[3], mwpsp_sequence** out);

MWPSP_API mwpsp_status mwpsp_sequence_from_json(const char* json, mwpsp_sequence** out);
MWPSP_API mwpsp_status mwpsp_sequence_to_json(const mwpsp_sequence* s, char** out);
MWPSP_API size_t mwpsp_sequence_length(const mwpsp_sequence* s);
MWPSP_API void mwpsp_sequence_free(mwpsp_sequence* s);

/* Replays with full validation. On failure `failed_index` (nullable) gets
 * the index of the failing move; it is SIZE_MAX otherwise. */
MWPSP_API mwpsp_status mwpsp_apply_sequence(const mwpsp_triangulation* t, const mwpsp_sequence* s,
                                            mwpsp_triangulation** out, size_t* failed_index);
MWPSP_API mwpsp_status mwpsp_invert_sequence(const mwpsp_triangulation* t, const mwpsp_sequence* s,
                                             mwpsp_sequence** out);
/* Edge substitutions from a to b. max_flips bounds canonicalization above
 * 8 vertices (0 = default). */
MWPSP_API mwpsp_status mwpsp_transform(const mwpsp_triangulation* a, const mwpsp_triangulation* b,
                                       size_t max_flips, mwpsp_sequence** out);

/* ---- planarity and spanning trees -------------------------------------- */

MWPSP_API mwpsp_status mwpsp_is_planar(uint32_t n, const uint32_t* pairs, size_t edge_count,
                                       int* out);
MWPSP_API mwpsp_status mwpsp_is_maximal_planar(uint32_t n, const uint32_t* pairs,
                                               size_t edge_count, int* out);
/* zero_fill != 0 lets zero-weight pairs complete the tree. */
MWPSP_API mwpsp_status mwpsp_maximum_spanning_tree(const mwpsp_instance* instance, int zero_fill,
                                                   mwpsp_tree** out);
MWPSP_API mwpsp_status mwpsp_tree_from_edges(uint32_t n, const uint32_t* pairs, size_t edge_count,
                                             mwpsp_tree** out);
/* The path 1-2-...-8. */
MWPSP_API mwpsp_status mwpsp_counterexample_path(mwpsp_tree** out);
/* {"n":N,"edges":[[u,v],...],"weight":"w"} */
MWPSP_API mwpsp_status mwpsp_tree_to_json(const mwpsp_tree* tree, const mwpsp_instance* instance,
                                          char** out);
MWPSP_API void mwpsp_tree_free(mwpsp_tree* tree);

/* ---- solvers ----------------------------------------------------------- */

typedef void (*mwpsp_visit_fn)(const mwpsp_triangulation* t, void* user);

/* Every labeled triangulation of {1..n}, 4 <= n <= 9. `visit` may be NULL
 * to count only; the handle passed to it is valid during the call. */
MWPSP_API mwpsp_status mwpsp_enumerate(uint32_t n, uint64_t budget, mwpsp_visit_fn visit,
                                       void* user, uint64_t* count);
/* Exhaustive optimum; `forced_pairs` holds 2 * forced_count ids (nullable
 * when forced_count is 0). At most `cap` optima are listed. */
MWPSP_API mwpsp_status mwpsp_exact(const mwpsp_instance* instance, const uint32_t* forced_pairs,
                                   size_t forced_count, size_t cap, uint64_t budget,
                                   mwpsp_report** out);
/* *out = 1 when no optimum contains every tree edge. */
MWPSP_API mwpsp_status mwpsp_verify_proposition4(const mwpsp_instance* instance,
                                                 const mwpsp_tree* tree, uint64_t budget, int* out);
MWPSP_API mwpsp_status mwpsp_mst_greedy(const mwpsp_instance* instance, mwpsp_triangulation** out);
MWPSP_API mwpsp_status mwpsp_local_search(const mwpsp_triangulation* start,
                                          const mwpsp_instance* instance, mwpsp_improve policy,
                                          uint64_t seed, mwpsp_report** out);
/* mst_greedy then the chosen improvement. */
MWPSP_API mwpsp_status mwpsp_solve(const mwpsp_instance* instance, mwpsp_improve improve,
                                   uint64_t seed, mwpsp_report** out);

MWPSP_API mwpsp_status mwpsp_report_from_json(const char* json, mwpsp_report** out);
MWPSP_API mwpsp_status mwpsp_report_to_json(const mwpsp_report* report, char** out);
MWPSP_API mwpsp_status mwpsp_report_best_weight(const mwpsp_report* report, char** out);
MWPSP_API size_t mwpsp_report_graph_count(const mwpsp_report* report);
MWPSP_API mwpsp_status mwpsp_report_graph(const mwpsp_report* report, size_t index,
                                          mwpsp_triangulation** out);
MWPSP_API void mwpsp_report_free(mwpsp_report* report);

#ifdef __cplusplus
}
#endif

#endif /* MWPSP_MWPSP_H */
