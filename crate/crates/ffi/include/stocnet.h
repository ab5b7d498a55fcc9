/* C interface for the stocnet graph-analysis library. */

#ifndef STOCNET_H
#define STOCNET_H

/* Generated with cbindgen; edit cbindgen.toml and the Rust sources instead. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum StocnetStatus {
  STOCNET_STATUS_OK = 0,
  // A required pointer argument was null.
  STOCNET_STATUS_NULL_POINTER = 1,
  // Arguments violate a precondition (bad sizes, probabilities, ids).
  STOCNET_STATUS_INVALID_ARGUMENT = 2,
  // An edge-list file failed to parse or validate.
  STOCNET_STATUS_PARSE_ERROR = 3,
  // A node id is outside the graph.
  STOCNET_STATUS_OUT_OF_RANGE = 4,
  // The node is not reachable from the decomposition's start.
  STOCNET_STATUS_UNREACHABLE = 5,
  // A caller-supplied buffer is too small.
  STOCNET_STATUS_BUFFER_TOO_SMALL = 6,
  // File could not be read or written.
  STOCNET_STATUS_IO_ERROR = 7,
} StocnetStatus;

// Opaque decomposition handle; remembers the graph it was computed from.
typedef struct StocnetDecomposition StocnetDecomposition;

// Opaque graph handle.
typedef struct StocnetGraph StocnetGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null. The pointer
// stays valid until the next failing call on the same thread.
const char *stocnet_last_error_message(void);

// Builds a graph from `pair_count` edges laid out as `u0,v0,u1,v1,...`.
// With `use_node_count = false` the node count is inferred from the
// largest id.
//
// # Safety
// `edges` must point to `2 * pair_count` readable u32 values; `out` must
// be a valid location to store the handle.
enum StocnetStatus stocnet_graph_from_edges(const uint32_t *edges,
                                            size_t pair_count,
                                            uint32_t node_count,
                                            bool use_node_count,
                                            struct StocnetGraph **out);

// Loads an edge-list file (`u v` per line, `#` comments).
//
// # Safety
// `path` must be a valid NUL-terminated string; `out` must be writable.
enum StocnetStatus stocnet_graph_load_path(const char *path, struct StocnetGraph **out);

// Writes the graph as an edge-list file.
//
// # Safety
// `graph` must be a live handle; `path` a valid NUL-terminated string.
enum StocnetStatus stocnet_graph_write_path(const struct StocnetGraph *graph, const char *path);

// Frees a graph handle; null is ignored.
//
// # Safety
// `graph` must be a handle from this library, not yet freed.
void stocnet_graph_free(struct StocnetGraph *graph);

// Node count; 0 for a null handle.
//
// # Safety
// `graph` must be a live handle or null.
uint32_t stocnet_graph_node_count(const struct StocnetGraph *graph);

// Edge count; 0 for a null handle.
//
// # Safety
// `graph` must be a live handle or null.
uint64_t stocnet_graph_edge_count(const struct StocnetGraph *graph);

// Degree of one node.
//
// # Safety
// `graph` must be a live handle; `out` writable.
enum StocnetStatus stocnet_graph_degree(const struct StocnetGraph *graph,
                                        uint32_t node,
                                        uint32_t *out);

// Cycle graph on `n >= 3` nodes.
//
// # Safety
// `out` must be writable.
enum StocnetStatus stocnet_generate_ring(size_t n, struct StocnetGraph **out);

// Ring where each node reaches `r` neighbors on both sides (`n > 2r`).
//
// # Safety
// `out` must be writable.
enum StocnetStatus stocnet_generate_extended_ring(size_t n, size_t r, struct StocnetGraph **out);

// Square lattice, optionally wrapped into a torus.
//
// # Safety
// `out` must be writable.
enum StocnetStatus stocnet_generate_square_lattice(size_t rows,
                                                   size_t cols,
                                                   bool torus,
                                                   struct StocnetGraph **out);

// Triangular lattice in row-offset coordinates.
//
// # Safety
// `out` must be writable.
enum StocnetStatus stocnet_generate_triangular_lattice(size_t rows,
                                                       size_t cols,
                                                       struct StocnetGraph **out);

// Watts-Strogatz small world: even degree `k`, rewiring probability `p`.
//
// # Safety
// `out` must be writable.
enum StocnetStatus stocnet_generate_watts_strogatz(size_t n,
                                                   size_t k,
                                                   double p,
                                                   uint64_t seed,
                                                   struct StocnetGraph **out);

// Holme-Kim scale-free graph with triad-formation probability `q`.
//
// # Safety
// `out` must be writable.
enum StocnetStatus stocnet_generate_holme_kim(size_t n,
                                              size_t m,
                                              double q,
                                              uint64_t seed,
                                              struct StocnetGraph **out);

// Barabasi-Albert preferential attachment (`holme_kim` with q = 0).
//
// # Safety
// `out` must be writable.
enum StocnetStatus stocnet_generate_barabasi_albert(size_t n,
                                                    size_t m,
                                                    uint64_t seed,
                                                    struct StocnetGraph **out);

// Uniform random simple graph with exactly `edges` edges.
//
// # Safety
// `out` must be writable.
enum StocnetStatus stocnet_generate_erdos_renyi(size_t n,
                                                size_t edges,
                                                uint64_t seed,
                                                struct StocnetGraph **out);

// Decomposes `graph` from `start`. With `random_tie_break` the primary
// parent among equal candidates is chosen by a generator seeded with
// `tie_break_seed` instead of by lowest id.
//
// # Safety
// `graph` must be a live handle; `out` writable.
enum StocnetStatus stocnet_decompose(const struct StocnetGraph *graph,
                                     uint32_t start,
                                     bool random_tie_break,
                                     uint64_t tie_break_seed,
                                     struct StocnetDecomposition **out);

// Frees a decomposition handle; null is ignored.
//
// # Safety
// `decomposition` must be a handle from this library, not yet freed.
void stocnet_decomposition_free(struct StocnetDecomposition *decomposition);

// Largest generation with a node (`L`); 0 for a null handle.
//
// # Safety
// `decomposition` must be a live handle or null.
uint32_t stocnet_decomposition_eccentricity(const struct StocnetDecomposition *decomposition);

// Generation (hop distance) of one node; `Unreachable` if the node is not
// in the start's component.
//
// # Safety
// `decomposition` must be a live handle; `out` writable.
enum StocnetStatus stocnet_node_generation(const struct StocnetDecomposition *decomposition,
                                           uint32_t node,
                                           uint32_t *out);

// Local absolute index: nodes newly reached per generation. The series
// has `eccentricity + 1` entries.
//
// # Safety
// `decomposition` must be a live handle; `buffer` must have room for
// `capacity` u64 values; `written` must be writable.
enum StocnetStatus stocnet_local_absolute_index(const struct StocnetDecomposition *decomposition,
                                                uint64_t *buffer,
                                                size_t capacity,
                                                size_t *written);

// STOC counts per generation, computed by the cumulative-difference
// method. The series has `eccentricity + 2` entries (the last one is the
// dummy generation).
//
// # Safety
// `graph` and `decomposition` must be live handles from the same graph;
// `buffer` must have room for `capacity` u64 values; `written` writable.
enum StocnetStatus stocnet_stoc_per_generation(const struct StocnetGraph *graph,
                                               const struct StocnetDecomposition *decomposition,
                                               uint64_t *buffer,
                                               size_t capacity,
                                               size_t *written);

// Total STOC count seen from the decomposition's start.
//
// # Safety
// `graph` and `decomposition` must be live handles from the same graph;
// `out` writable.
enum StocnetStatus stocnet_census_total(const struct StocnetGraph *graph,
                                        const struct StocnetDecomposition *decomposition,
                                        uint64_t *out);

// `1 + edges - nodes` over the component containing `node`.
//
// # Safety
// `graph` must be a live handle; `out` writable.
enum StocnetStatus stocnet_euler_total(const struct StocnetGraph *graph,
                                       uint32_t node,
                                       uint64_t *out);

// Largest absolute residual of the index/STOC recursion over all valid
// generations; zero on every graph if the implementation is consistent.
//
// # Safety
// `graph` and `decomposition` must be live handles from the same graph;
// `out` writable.
enum StocnetStatus stocnet_recursion_max_residual(const struct StocnetGraph *graph,
                                                  const struct StocnetDecomposition *decomposition,
                                                  int64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STOCNET_H */
