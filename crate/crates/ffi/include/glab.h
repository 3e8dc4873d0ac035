#ifndef GLAB_H
#define GLAB_H

/* Generated by cbindgen -- do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Success.
 */
#define GLAB_OK 0

/**
 * A box verification ran to completion and found a failing identity.
 */
#define GLAB_VERIFY_FAILED 1

/**
 * Malformed input: bad UTF-8, bad JSON, or an unparseable shape.
 */
#define GLAB_PARSE_ERROR 2

/**
 * Structurally valid input outside the domain (e.g. a non-nested shape).
 */
#define GLAB_DOMAIN_ERROR 3

/**
 * A required pointer argument was NULL.
 */
#define GLAB_NULL_POINTER 4

/**
 * An internal invariant failed; see [`glab_last_error`].
 */
#define GLAB_PANIC 5

/**
 * Opaque polynomial handle.
 */
typedef struct GlabPoly GlabPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The last error message recorded on this thread. The pointer stays valid
 * until the next failing call on the same thread; do not free it.
 */
const char *glab_last_error(void);

/**
 * Computes the polynomial for `shape` (e.g. "3,2,2/1,1") in `xvars`
 * x-variables by enumerating reverse plane partitions.
 *
 * # Safety
 * `shape` must be a NUL-terminated string; `out` must be valid for writes.
 */
int32_t glab_poly_enumerate(const char *shape, uint32_t xvars, struct GlabPoly **out);

/**
 * Computes the same polynomial as a determinant. Non-nested shapes yield
 * the zero polynomial rather than an error.
 *
 * If `t_equals_one` is nonzero, uses the binomial entries that evaluate the
 * polynomial at t = 1.
 *
 * # Safety
 * `shape` must be a NUL-terminated string; `out` must be valid for writes.
 */
int32_t glab_poly_determinant(const char *shape,
                              uint32_t xvars,
                              int32_t t_equals_one,
                              struct GlabPoly **out);

/**
 * Sets every t variable to `value` (0 or 1).
 *
 * # Safety
 * `p` must be a live handle from this library; `out` valid for writes.
 */
int32_t glab_poly_specialize_t(const struct GlabPoly *p, uint8_t value, struct GlabPoly **out);

/**
 * Renders the canonical text form (graded ordering, stable across runs).
 *
 * # Safety
 * `p` must be a live handle from this library; `out` valid for writes.
 */
int32_t glab_poly_to_string(const struct GlabPoly *p, char **out);

/**
 * Renders the polynomial as JSON (a list of term records).
 *
 * # Safety
 * `p` must be a live handle from this library; `out` valid for writes.
 */
int32_t glab_poly_to_json(const struct GlabPoly *p, char **out);

/**
 * Number of terms; -1 if the handle is NULL.
 *
 * # Safety
 * `p` must be NULL or a live handle from this library.
 */
int64_t glab_poly_num_terms(const struct GlabPoly *p);

/**
 * Structural equality; 1 equal, 0 different, -1 if either handle is NULL.
 *
 * # Safety
 * Both arguments must be NULL or live handles from this library.
 */
int32_t glab_poly_eq(const struct GlabPoly *a, const struct GlabPoly *b);

/**
 * Releases a polynomial handle. NULL is a no-op.
 *
 * # Safety
 * `p` must be NULL or a handle not freed before.
 */
void glab_poly_free(struct GlabPoly *p);

/**
 * Releases a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must be NULL or a string from this library not freed before.
 */
void glab_string_free(char *s);

/**
 * Checks the full identity chain on every nested shape pair in the
 * `rows` x `cols` box with `xvars` x-variables and writes the JSON report.
 * Returns `GLAB_VERIFY_FAILED` (with the report still written) if any
 * identity fails.
 *
 * # Safety
 * `out_report_json` must be valid for writes.
 */
int32_t glab_verify_box(uintptr_t rows, uintptr_t cols, uint32_t xvars, char **out_report_json);

/**
 * Runs the involution on a serialized path family (the same JSON the CLI's
 * `involution-trace` command reads) and writes the full trace as JSON.
 *
 * # Safety
 * `family_json` must be a NUL-terminated string; `out_trace_json` valid
 * for writes.
 */
int32_t glab_involution_trace(const char *family_json, char **out_trace_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GLAB_H */
