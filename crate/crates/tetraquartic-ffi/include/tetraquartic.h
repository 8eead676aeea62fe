#ifndef TETRAQUARTIC_H
#define TETRAQUARTIC_H

/* Generated by cbindgen from tetraquartic-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Claim-battery sections, accepted by [`tq_report_run`] as plain
 * integers.
 */
typedef enum TqSection {
  /**
   * Lattice invariants, class identities, Riemann-Roch arithmetic.
   */
  TQ_SECTION_LATTICE = 0,
  /**
   * Discriminant-form values, dual lifts, automorphism group.
   */
  TQ_SECTION_DISC_FORM = 1,
  /**
   * Isometries and induced discriminant actions.
   */
  TQ_SECTION_ISOMETRY = 2,
  /**
   * Projective geometry of the quartic.
   */
  TQ_SECTION_QUARTIC = 3,
  /**
   * Everything.
   */
  TQ_SECTION_ALL = 4,
} TqSection;

/**
 * Status code of every fallible call.
 */
typedef enum TqStatus {
  /**
   * Success.
   */
  TQ_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  TQ_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  TQ_STATUS_UTF8 = 2,
  /**
   * The input could not be parsed or a parameter was out of range;
   * see [`tq_last_error_message`].
   */
  TQ_STATUS_INVALID_INPUT = 3,
  /**
   * An internal panic was caught at the boundary.
   */
  TQ_STATUS_PANIC = 4,
} TqStatus;

/**
 * Opaque coefficient set of one tetrahedral quartic.
 */
typedef struct TqQuartic TqQuartic;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The most recent `InvalidInput` diagnostic of the calling thread, or
 * NULL when none was recorded.  The caller owns the returned string and
 * must release it with [`tq_string_free`].
 */
char *tq_last_error_message(void);

/**
 * Releases a string returned by this library.  NULL is a no-op.
 *
 * # Safety
 *
 * `s` must be NULL or a pointer previously returned by a function of
 * this library and not yet freed.
 */
void tq_string_free(char *s);

/**
 * Creates a handle holding the built-in reference sample.  Never fails;
 * release with [`tq_quartic_free`].
 */
struct TqQuartic *tq_quartic_reference(void);

/**
 * Parses a coefficient set from JSON (twelve mandatory `"p/q"` string
 * fields `a0..d3`, optional `delta`) and writes the new handle to
 * `out`.
 *
 * # Safety
 *
 * `json` must be a valid NUL-terminated string and `out` a valid
 * pointer.
 */
enum TqStatus tq_quartic_from_json(const char *json, struct TqQuartic **out);

/**
 * Releases a quartic handle.  NULL is a no-op.
 *
 * # Safety
 *
 * `handle` must be NULL or a pointer previously returned by a
 * constructor of this library and not yet freed.
 */
void tq_quartic_free(struct TqQuartic *handle);

/**
 * Writes 1 to `out` when every genericity flag of the handle's
 * coefficients holds, 0 otherwise.
 *
 * # Safety
 *
 * `handle` and `out` must be valid pointers.
 */
enum TqStatus tq_quartic_is_generic(const struct TqQuartic *handle, int *out);

/**
 * Number of claim ids a full report emits (the frozen manifest size).
 */
size_t tq_claim_count(void);

/**
 * Runs one section of the claim battery (`section` is a [`TqSection`]
 * value) on the handle's coefficients with `jobs` worker threads (0
 * defers to the `TETRAQUARTIC_JOBS` environment variable, then to one
 * worker per core).  On success writes the JSON claim-record array to
 * `out_json` (release with [`tq_string_free`]) and, when `out_failures`
 * is non-NULL, the number of failing claims.
 *
 * # Safety
 *
 * `handle` and `out_json` must be valid pointers; `out_failures` may be
 * NULL.
 */
enum TqStatus tq_report_run(const struct TqQuartic *handle,
                            int section,
                            size_t jobs,
                            char **out_json,
                            size_t *out_failures);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TETRAQUARTIC_H */
