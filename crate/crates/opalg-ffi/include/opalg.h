#ifndef OPALG_H
#define OPALG_H

/* Generated by cbindgen from the opalg-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum OpalgStatus {
  /**
   * The operation succeeded and, if it ran checks, they all passed.
   */
  OPALG_STATUS_OK = 0,
  /**
   * The operation ran to completion but at least one check failed.
   */
  OPALG_STATUS_CHECK_FAILED = 1,
  /**
   * The operation could not run; see `opalg_last_error`.
   */
  OPALG_STATUS_ERROR = 2,
  /**
   * A required pointer argument was null.
   */
  OPALG_STATUS_NULL_ARGUMENT = 3,
  /**
   * A string argument was not valid UTF-8.
   */
  OPALG_STATUS_INVALID_UTF8 = 4,
} OpalgStatus;

/**
 * An algebra description plus the arity bound its checks run to.
 */
typedef struct OpalgAlgebra OpalgAlgebra;

/**
 * Result lines of a finished check run.
 */
typedef struct OpalgReport OpalgReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The most recent error message on this thread, or an empty string.
 * Free with [`opalg_string_free`].
 */
char *opalg_last_error(void);

/**
 * Verifies that the generator differential of `family` (`"ainf"` or
 * `"linf"`) squares to zero up to `max_arity`.
 *
 * # Safety
 * `family` must be a valid NUL-terminated string and `out` a valid
 * pointer; the report must be freed with [`opalg_report_free`].
 */
enum OpalgStatus opalg_check_dsq(const char *family, uintptr_t max_arity, struct OpalgReport **out);

/**
 * Number of terms of the generator differential at one arity.
 *
 * # Safety
 * `family` and `out_count` must be valid pointers.
 */
enum OpalgStatus opalg_diff_term_count(const char *family, uintptr_t arity, uintptr_t *out_count);

/**
 * Parses an algebra description in the text document format and fixes
 * the arity bound for later checks.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid
 * pointer; the handle must be freed with [`opalg_algebra_free`].
 */
enum OpalgStatus opalg_algebra_parse(const char *text,
                                     uintptr_t max_arity,
                                     struct OpalgAlgebra **out);

/**
 * Runs the axiom checker matching the document kind.
 *
 * # Safety
 * `alg` must be a live handle from [`opalg_algebra_parse`] and `out` a
 * valid pointer.
 */
enum OpalgStatus opalg_algebra_check(const struct OpalgAlgebra *alg, struct OpalgReport **out);

/**
 * Contracts the algebra onto its homology, transfers the structure and
 * verifies it. On success `out_alg` owns the transferred structure
 * (serialize it to read the operations and the morphism table).
 *
 * # Safety
 * `alg` must be a live handle; `out_alg` and `out_report` must be valid
 * pointers.
 */
enum OpalgStatus opalg_algebra_transfer(const struct OpalgAlgebra *alg,
                                        uintptr_t max_arity,
                                        struct OpalgAlgebra **out_alg,
                                        struct OpalgReport **out_report);

/**
 * Serializes the handle's document back to text. Free the result with
 * [`opalg_string_free`].
 *
 * # Safety
 * `alg` must be a live handle.
 */
char *opalg_algebra_serialize(const struct OpalgAlgebra *alg);

/**
 * True when every line of the report passed.
 *
 * # Safety
 * `report` must be a live handle from a check entry point.
 */
bool opalg_report_passed(const struct OpalgReport *report);

/**
 * Number of check lines in the report.
 *
 * # Safety
 * `report` must be a live handle.
 */
uintptr_t opalg_report_len(const struct OpalgReport *report);

/**
 * The machine-readable rendering, one `name arity pass|fail count` line
 * per check. Free with [`opalg_string_free`].
 *
 * # Safety
 * `report` must be a live handle.
 */
char *opalg_report_machine(const struct OpalgReport *report);

/**
 * # Safety
 * `ptr` must come from this library and not have been freed.
 */
void opalg_report_free(struct OpalgReport *ptr);

/**
 * # Safety
 * `ptr` must come from this library and not have been freed.
 */
void opalg_algebra_free(struct OpalgAlgebra *ptr);

/**
 * # Safety
 * `ptr` must be a string returned by this library and not yet freed.
 */
void opalg_string_free(char *ptr);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OPALG_H */
