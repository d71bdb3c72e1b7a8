#ifndef FH_BLEND_H
#define FH_BLEND_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. Zero is success.
typedef enum FhbStatus {
  FHB_STATUS_OK = 0,
  FHB_STATUS_NULL_POINTER = 1,
  FHB_STATUS_INVALID_NODES = 2,
  FHB_STATUS_LENGTH_MISMATCH = 3,
  FHB_STATUS_NON_FINITE = 4,
  FHB_STATUS_DEGREE_OUT_OF_RANGE = 5,
  FHB_STATUS_END_COUNT_OUT_OF_RANGE = 6,
  FHB_STATUS_WEIGHT_RANGE = 7,
  FHB_STATUS_BUFFER_TOO_SMALL = 8,
  FHB_STATUS_INTERNAL = 99,
} FhbStatus;

// Opaque interpolant handle.
typedef struct FhbInterpolant FhbInterpolant;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds `r^(d,e)` through `(xs[i], ys[i])`, `i < len`. Nodes must be
// strictly increasing; `len` is `n + 1`.
//
// # Safety
// `xs` and `ys` must be valid for `len` reads; `out` must be writable.
enum FhbStatus fhb_interpolant_new(const double *xs,
                                   const double *ys,
                                   size_t len,
                                   size_t d,
                                   size_t e,
                                   struct FhbInterpolant **out);

// Like `fhb_interpolant_new` with `len` equispaced nodes on `[a, b]`.
//
// # Safety
// `ys` must be valid for `len` reads; `out` must be writable.
enum FhbStatus fhb_interpolant_new_equispaced(double a,
                                              double b,
                                              const double *ys,
                                              size_t len,
                                              size_t d,
                                              size_t e,
                                              struct FhbInterpolant **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `h` must be null or a handle not yet freed.
void fhb_interpolant_free(struct FhbInterpolant *h);

// Number of nodes, `n + 1`. Zero for a null handle.
//
// # Safety
// `h` must be null or a live handle.
size_t fhb_interpolant_len(const struct FhbInterpolant *h);

// Evaluates at `x`. At a node the stored sample is returned exactly.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum FhbStatus fhb_interpolant_eval(const struct FhbInterpolant *h, double x, double *out);

// Evaluates at `count` points. Stops at the first failure.
//
// # Safety
// `xs` must be valid for `count` reads and `out` for `count` writes.
enum FhbStatus fhb_interpolant_eval_many(const struct FhbInterpolant *h,
                                         const double *xs,
                                         size_t count,
                                         double *out);

// Writes all basis values at `x` into `out`, which must hold at least
// `fhb_interpolant_len(h)` doubles.
//
// # Safety
// `out` must be valid for `out_len` writes.
enum FhbStatus fhb_interpolant_basis(const struct FhbInterpolant *h,
                                     double x,
                                     double *out,
                                     size_t out_len);

// Lebesgue function `Σ |β_j(x)|` at `x`.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum FhbStatus fhb_interpolant_lebesgue(const struct FhbInterpolant *h, double x, double *out);

// Static description of a status code.
const char *fhb_status_message(enum FhbStatus status);

// Message for the most recent failure on this thread, or an empty string.
// Valid until the next failing call on the same thread.
const char *fhb_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FH_BLEND_H */
