#ifndef DICHOOSE_H
#define DICHOOSE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DichooseStatus {
  DICHOOSE_STATUS_OK = 0,
  DICHOOSE_STATUS_NULL_POINTER = 1,
  DICHOOSE_STATUS_INVALID_UTF8 = 2,
  DICHOOSE_STATUS_INVALID_ARGUMENT = 3,
  DICHOOSE_STATUS_PARSE = 4,
  /**
   * A search would exceed its cap; raise it through a caps handle.
   */
  DICHOOSE_STATUS_CAP_EXCEEDED = 5,
  DICHOOSE_STATUS_PRECONDITION = 6,
  DICHOOSE_STATUS_EXTRACTION_FAILED = 7,
  /**
   * Out-of-range vertex, loop, duplicate edge or arc, or a digon where an
   * orientation is required.
   */
  DICHOOSE_STATUS_INVALID_GRAPH = 8,
  /**
   * An output buffer is shorter than the vertex count.
   */
  DICHOOSE_STATUS_BUFFER_TOO_SMALL = 9,
  /**
   * A Rust panic was caught at the boundary. This is a bug.
   */
  DICHOOSE_STATUS_PANIC = 10,
} DichooseStatus;

/**
 * Search caps.
 */
typedef struct DichooseCaps DichooseCaps;

/**
 * A digraph; digons are allowed.
 */
typedef struct DichooseDigraph DichooseDigraph;

/**
 * An undirected simple graph.
 */
typedef struct DichooseGraph DichooseGraph;

/**
 * A list assignment: one set of positive colours per vertex.
 */
typedef struct DichooseLists DichooseLists;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * `"dichoose <version>"`, statically allocated.
 */
const char *dichoose_version(void);

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call on this thread.
 */
const char *dichoose_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void dichoose_string_free(char *s);

/**
 * Caps from `key=value,...` overrides on top of the defaults; `spec` may be null.
 *
 * # Safety
 * `spec` is null or a NUL-terminated string; `out` is writable.
 */
enum DichooseStatus dichoose_caps_new(const char *spec, struct DichooseCaps **out);

/**
 * # Safety
 * `caps` is null or a live handle.
 */
void dichoose_caps_free(struct DichooseCaps *caps);

/**
 * # Safety
 * `out` is writable.
 */
enum DichooseStatus dichoose_graph_new(size_t n, struct DichooseGraph **out);

/**
 * Parses the `graph <n>` text format.
 *
 * # Safety
 * `src` is a NUL-terminated string; `out` is writable.
 */
enum DichooseStatus dichoose_graph_parse(const char *src, struct DichooseGraph **out);

/**
 * # Safety
 * `g` is a live handle.
 */
enum DichooseStatus dichoose_graph_add_edge(struct DichooseGraph *g, size_t u, size_t v);

/**
 * # Safety
 * `g` is a live handle.
 */
size_t dichoose_graph_vertex_count(const struct DichooseGraph *g);

/**
 * # Safety
 * `g` is a live handle.
 */
size_t dichoose_graph_edge_count(const struct DichooseGraph *g);

/**
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum DichooseStatus dichoose_graph_to_text(const struct DichooseGraph *g, char **out);

/**
 * # Safety
 * `g` is null or a live handle.
 */
void dichoose_graph_free(struct DichooseGraph *g);

/**
 * # Safety
 * `out` is writable.
 */
enum DichooseStatus dichoose_digraph_new(size_t n, struct DichooseDigraph **out);

/**
 * Parses the `digraph <n>` text format.
 *
 * # Safety
 * `src` is a NUL-terminated string; `out` is writable.
 */
enum DichooseStatus dichoose_digraph_parse(const char *src, struct DichooseDigraph **out);

/**
 * # Safety
 * `d` is a live handle.
 */
enum DichooseStatus dichoose_digraph_add_arc(struct DichooseDigraph *d, size_t u, size_t v);

/**
 * # Safety
 * `d` is a live handle.
 */
size_t dichoose_digraph_vertex_count(const struct DichooseDigraph *d);

/**
 * # Safety
 * `d` is a live handle.
 */
size_t dichoose_digraph_arc_count(const struct DichooseDigraph *d);

/**
 * # Safety
 * `d` is a live handle; `out` is writable.
 */
enum DichooseStatus dichoose_digraph_is_acyclic(const struct DichooseDigraph *d, bool *out);

/**
 * # Safety
 * `d` is a live handle; `out` is writable.
 */
enum DichooseStatus dichoose_digraph_to_text(const struct DichooseDigraph *d, char **out);

/**
 * # Safety
 * `d` is null or a live handle.
 */
void dichoose_digraph_free(struct DichooseDigraph *d);

/**
 * The tournament on `2d(d+1)` vertices with both semidegrees at least `d`.
 *
 * # Safety
 * `out` is writable.
 */
enum DichooseStatus dichoose_tournament(size_t d, struct DichooseDigraph **out);

/**
 * # Safety
 * `out` is writable.
 */
enum DichooseStatus dichoose_complete_bipartite(size_t a, size_t b, struct DichooseGraph **out);

/**
 * Every edge of `g` replaced by a digon.
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum DichooseStatus dichoose_bidirected(const struct DichooseGraph *g,
                                        struct DichooseDigraph **out);

/**
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum DichooseStatus dichoose_random_orientation(const struct DichooseGraph *g,
                                                uint64_t seed,
                                                struct DichooseDigraph **out);

/**
 * Exact dichromatic number. When `colours` is non-null it receives an
 * optimal dicolouring and must hold at least `n` entries.
 *
 * # Safety
 * Handles are live; `value` is writable; `colours` is null or holds `colours_len` entries.
 */
enum DichooseStatus dichoose_dichromatic_number(const struct DichooseDigraph *d,
                                                const struct DichooseCaps *caps,
                                                size_t *value,
                                                uint32_t *colours,
                                                size_t colours_len);

/**
 * Exact chromatic number, with an optimal colouring as in
 * [`dichoose_dichromatic_number`].
 *
 * # Safety
 * As for [`dichoose_dichromatic_number`].
 */
enum DichooseStatus dichoose_chromatic_number(const struct DichooseGraph *g,
                                              const struct DichooseCaps *caps,
                                              size_t *value,
                                              uint32_t *colours,
                                              size_t colours_len);

/**
 * Parses `<v>: <colour> ...` lines, one per vertex.
 *
 * # Safety
 * `src` is a NUL-terminated string; `out` is writable.
 */
enum DichooseStatus dichoose_lists_parse(const char *src, struct DichooseLists **out);

/**
 * # Safety
 * `lists` is null or a live handle.
 */
void dichoose_lists_free(struct DichooseLists *lists);

/**
 * Searches for an L-dicolouring; `found` is false when none exists. On
 * success the colouring is copied to `colours` if non-null.
 *
 * # Safety
 * Handles are live; `found` is writable; `colours` is null or holds `colours_len` entries.
 */
enum DichooseStatus dichoose_l_dicolouring(const struct DichooseDigraph *d,
                                           const struct DichooseLists *lists,
                                           const struct DichooseCaps *caps,
                                           bool *found,
                                           uint32_t *colours,
                                           size_t colours_len);

/**
 * Dichoosability of a digraph.
 *
 * # Safety
 * Handles are live; `value` is writable.
 */
enum DichooseStatus dichoose_dichoosability(const struct DichooseDigraph *d,
                                            const struct DichooseCaps *caps,
                                            size_t *value);

/**
 * Maximum dichoosability over the orientations of `g`. When `certificate`
 * is non-null it receives the lower-bound certificate text, or null when
 * the value is below 2.
 *
 * # Safety
 * Handles are live; `value` is writable; `certificate` is null or writable.
 */
enum DichooseStatus dichoose_graph_dichoosability(const struct DichooseGraph *g,
                                                  const struct DichooseCaps *caps,
                                                  size_t *value,
                                                  char **certificate);

/**
 * Replays a certificate. `valid` is false when any check fails; the reason
 * is then available from [`dichoose_last_error`].
 *
 * # Safety
 * `src` is a NUL-terminated string; `caps` is null or live; `valid` is writable.
 */
enum DichooseStatus dichoose_verify_certificate(const char *src,
                                                const struct DichooseCaps *caps,
                                                bool *valid);

/**
 * Exact probability that a uniformly random orientation of `g` is acyclic,
 * as a double.
 *
 * # Safety
 * Handles are live; `probability` is writable.
 */
enum DichooseStatus dichoose_acyclic_probability(const struct DichooseGraph *g,
                                                 const struct DichooseCaps *caps,
                                                 double *probability);

/**
 * Monte Carlo estimate of the same probability. Seeded; the result does
 * not depend on the thread count.
 *
 * # Safety
 * `g` is live; `estimate` is writable; `std_error` is null or writable.
 */
enum DichooseStatus dichoose_mc_acyclic_probability(const struct DichooseGraph *g,
                                                    size_t trials,
                                                    uint64_t seed,
                                                    double *estimate,
                                                    double *std_error);

/**
 * Whether both binomial inequalities hold at `r`.
 *
 * # Safety
 * `first` and `second` are writable.
 */
enum DichooseStatus dichoose_binomial_inequalities(uint64_t r, bool *first, bool *second);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DICHOOSE_H */
