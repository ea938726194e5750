#ifndef EDS_UNICYCLIC_H
#define EDS_UNICYCLIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EdsStatus {
  EDS_STATUS_OK = 0,
  EDS_STATUS_NULL_POINTER = 1,
  EDS_STATUS_INVALID_ARGUMENT = 2,
  EDS_STATUS_INVALID_GRAPH = 3,
  EDS_STATUS_PARSE = 4,
  EDS_STATUS_NOT_UNICYCLIC = 5,
  EDS_STATUS_TOO_LARGE = 6,
  EDS_STATUS_BUFFER_TOO_SMALL = 7,
  EDS_STATUS_INTERNAL = 8,
} EdsStatus;

// Opaque graph handle.
typedef struct EdsGraph EdsGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a graph from `edge_count` vertex pairs stored flat in `edges`
// (`edges[2i]`, `edges[2i + 1]`).
//
// # Safety
// `edges` must point to `2 * edge_count` readable values (it may be null
// when `edge_count` is 0) and `out` must be writable.
enum EdsStatus eds_graph_from_edges(size_t order,
                                    const uint32_t *edges,
                                    size_t edge_count,
                                    struct EdsGraph **out);

// Builds a graph from a family expression such as `U(10,5)`.
//
// # Safety
// `spec` must be a NUL-terminated string and `out` writable.
enum EdsStatus eds_graph_from_family(const char *spec, struct EdsGraph **out);

// Decodes one graph6 line.
//
// # Safety
// `text` must be a NUL-terminated string and `out` writable.
enum EdsStatus eds_graph_from_graph6(const char *text, struct EdsGraph **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `g` must come from an `eds_graph_from_*` call and not be freed twice.
void eds_graph_free(struct EdsGraph *g);

// # Safety
// `g` must be a live handle and `out` writable.
enum EdsStatus eds_graph_order(const struct EdsGraph *g, size_t *out);

// # Safety
// `g` must be a live handle and `out` writable.
enum EdsStatus eds_graph_size(const struct EdsGraph *g, size_t *out);

// Eccentric distance sum.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum EdsStatus eds_graph_eds(const struct EdsGraph *g, uint64_t *out);

// Wiener index.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum EdsStatus eds_graph_wiener(const struct EdsGraph *g, uint64_t *out);

// # Safety
// `g` must be a live handle and `out` writable.
enum EdsStatus eds_graph_degree_distance(const struct EdsGraph *g, uint64_t *out);

// Fails with `TooLarge` for graphs that are neither forests nor
// unicyclic and have more than 16 vertices.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum EdsStatus eds_graph_matching_number(const struct EdsGraph *g, size_t *out);

// 0 for forests.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum EdsStatus eds_graph_girth(const struct EdsGraph *g, size_t *out);

// # Safety
// `g` must be a live handle and `out` writable.
enum EdsStatus eds_graph_max_degree(const struct EdsGraph *g, size_t *out);

// Copies the eccentricities into `buf`. `written` always receives the
// order; when `len` is smaller, nothing is copied and `BufferTooSmall` is
// returned.
//
// # Safety
// `g` must be a live handle, `buf` writable for `len` values and `written`
// writable.
enum EdsStatus eds_graph_eccentricities(const struct EdsGraph *g,
                                        uint64_t *buf,
                                        size_t len,
                                        size_t *written);

// Canonical isomorphism code of a unicyclic graph, e.g. `3:(()()),(),()`.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum EdsStatus eds_graph_canonical_code(const struct EdsGraph *g, char **out);

// graph6 encoding.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum EdsStatus eds_graph_to_graph6(const struct EdsGraph *g, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void eds_string_free(char *s);

// Evaluates a named closed form (`"G1"`, `"EQ21_EVEN"`, ...) exactly. The
// value is `numerator / denominator` in lowest terms with a positive
// denominator.
//
// # Safety
// `name` must be a NUL-terminated string, `params` readable for `count`
// values, and both outputs writable.
enum EdsStatus eds_formula_eval(const char *name,
                                const int64_t *params,
                                size_t count,
                                int64_t *numerator,
                                int64_t *denominator);

// Message for the most recent failure on this thread, or null. The pointer
// stays valid until the next failing call on the same thread.
const char *eds_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *eds_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EDS_UNICYCLIC_H */
