#ifndef NUMRANGE_H
#define NUMRANGE_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum NrStatus {
  NR_STATUS_OK = 0,
  NR_STATUS_NULL_POINTER = 1,
  NR_STATUS_INVALID_ARGUMENT = 2,
  NR_STATUS_PARSE = 3,
  NR_STATUS_ZERO_OPERATOR = 4,
  NR_STATUS_DEGENERATE = 5,
  NR_STATUS_NOT_CONVERGED = 6,
  NR_STATUS_INTERNAL = 7,
} NrStatus;

typedef enum NrNorm {
  NR_NORM_SPECTRAL = 0,
  NR_NORM_INDUCED_ONE = 1,
  NR_NORM_INDUCED_INF = 2,
  NR_NORM_FROBENIUS = 3,
} NrNorm;

typedef enum NrRegionKind {
  NR_REGION_KIND_SEGMENT = 0,
  NR_REGION_KIND_QUADRILATERAL = 1,
  NR_REGION_KIND_HEXAGON = 2,
  NR_REGION_KIND_OCTAGON = 3,
} NrRegionKind;

// Opaque matrix handle.
typedef struct NrMatrix NrMatrix;

// Numerical-radius bounds for one matrix. `eta1` and `eta2` are NaN when
// the matrix is a complex multiple of a Hermitian one.
typedef struct NrBoundReport {
  double spectral_norm;
  double classical;
  double kittaneh_power;
  double kittaneh_mean;
  double corollary;
  double eta1;
  double eta2;
} NrBoundReport;

typedef struct NrPoint {
  double x;
  double y;
} NrPoint;

// Enclosing region. Polygons list `vertex_count` vertices counterclockwise;
// a segment stores its two endpoints.
typedef struct NrEnclosure {
  enum NrRegionKind kind;
  size_t vertex_count;
  struct NrPoint vertices[8];
} NrEnclosure;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a `dim x dim` matrix from `len = 2 * dim * dim` doubles holding
// row-major entries as interleaved (real, imaginary) pairs.
//
// # Safety
// `data` must point to `len` readable doubles and `out` must be writable.
enum NrStatus nr_matrix_new(size_t dim, const double *data, size_t len, struct NrMatrix **out);

// Parses a matrix from a NUL-terminated UTF-8 string, either the JSON form
// `{"dim": n, "entries": [[re, im], ...]}` or whitespace-separated rows of
// complex tokens such as `2-4i`.
//
// # Safety
// `text` must be a valid C string and `out` must be writable.
enum NrStatus nr_matrix_parse(const char *text, struct NrMatrix **out);

// Releases a handle. NULL is ignored.
//
// # Safety
// `m` must come from this library and must not be used afterwards.
void nr_matrix_free(struct NrMatrix *m);

// Matrix dimension, or 0 for NULL.
//
// # Safety
// `m` must be NULL or a live handle.
size_t nr_matrix_dim(const struct NrMatrix *m);

// # Safety
// `m` must be a live handle and `out` writable.
enum NrStatus nr_norm(const struct NrMatrix *m, enum NrNorm kind, double *out);

// Fills `out` with all four numerical-radius bounds.
//
// # Safety
// `m` must be a live handle and `out` writable.
enum NrStatus nr_bound_report(const struct NrMatrix *m, struct NrBoundReport *out);

// Computes the polygon (or segment) enclosing the numerical range.
//
// # Safety
// `m` must be a live handle and `out` writable.
enum NrStatus nr_enclosure(const struct NrMatrix *m, enum NrNorm kind, struct NrEnclosure *out);

// Numerical radius estimated from a boundary sweep over `angles` directions.
//
// # Safety
// `m` must be a live handle and `out` writable.
enum NrStatus nr_oracle_radius(const struct NrMatrix *m, size_t angles, double *out);

// Largest distance by which a sampled point of the numerical range lies
// outside the enclosure (0 when every sample is contained).
//
// # Safety
// `m` must be a live handle and `out` writable.
enum NrStatus nr_max_violation(const struct NrMatrix *m,
                               enum NrNorm kind,
                               size_t angles,
                               size_t samples,
                               uint64_t seed,
                               double *out);

// Message for the last failed call on this thread, or NULL. The pointer is
// valid until the next call into this library on the same thread.
const char *nr_last_error_message(void);

// Library version as a static C string.
const char *nr_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NUMRANGE_H */
