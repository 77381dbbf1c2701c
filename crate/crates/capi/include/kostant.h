#ifndef KOSTANT_H
#define KOSTANT_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Analytic flags for `kostant_verdict_render`. For k = n the two
 * Rankin-Selberg fields must be `Absent`.
 */
typedef enum KostantFlag {
  KOSTANT_FLAG_ABSENT = 0,
  KOSTANT_FLAG_FALSE = 1,
  KOSTANT_FLAG_TRUE = 2,
} KostantFlag;

/**
 * Status codes returned by the fallible entry points.
 */
typedef enum KostantStatus {
  KOSTANT_STATUS_OK = 0,
  /**
   * Some oracle check failed (verification ran to completion).
   */
  KOSTANT_STATUS_VERIFICATION_FAILED = 1,
  /**
   * Malformed arguments: bad rank data, non-dominant weight, bad UTF-8...
   */
  KOSTANT_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Null pointer where data was required.
   */
  KOSTANT_STATUS_NULL_POINTER = 3,
  /**
   * Internal rendering failure.
   */
  KOSTANT_STATUS_INTERNAL = 4,
} KostantStatus;

/**
 * Opaque classified table: every Kostant representative for one
 * (n, k, lambda), with evaluation data, in the table sort order.
 */
typedef struct KostantTable KostantTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or NULL if
 * none. The caller owns the returned string (free with
 * `kostant_string_free`).
 */
char *kostant_last_error_message(void);

/**
 * Crate version as a static string; do not free.
 */
const char *kostant_version(void);

/**
 * Frees a string allocated by this library. NULL is accepted.
 *
 * # Safety
 * `s` must have been returned by a function of this library and not freed
 * before.
 */
void kostant_string_free(char *s);

/**
 * Builds a table handle, or NULL on error. `lambda` is a comma-separated
 * dominant weight such as "2,1,0".
 *
 * # Safety
 * `lambda` must be a valid NUL-terminated string or NULL.
 */
struct KostantTable *kostant_table_new(uintptr_t n, uintptr_t k, const char *lambda);

/**
 * Number of rows (Kostant representatives) in the table.
 *
 * # Safety
 * `table` must be a live handle from `kostant_table_new` or NULL.
 */
uintptr_t kostant_table_len(const struct KostantTable *table);

/**
 * Rank n of the table's context (0 for NULL).
 *
 * # Safety
 * `table` must be a live handle from `kostant_table_new` or NULL.
 */
uintptr_t kostant_table_n(const struct KostantTable *table);

/**
 * Parabolic index k of the table's context (0 for NULL).
 *
 * # Safety
 * `table` must be a live handle from `kostant_table_new` or NULL.
 */
uintptr_t kostant_table_k(const struct KostantTable *table);

/**
 * The table's highest weight as a comma-separated list (caller frees).
 *
 * # Safety
 * `table` must be a live handle from `kostant_table_new` or NULL.
 */
char *kostant_table_lambda(const struct KostantTable *table);

/**
 * JSON object for one row, or NULL if the index is out of range.
 *
 * # Safety
 * `table` must be a live handle from `kostant_table_new` or NULL.
 */
char *kostant_table_row_json(const struct KostantTable *table, uintptr_t index);

/**
 * Releases a table handle. NULL is accepted.
 *
 * # Safety
 * `table` must be a live handle from `kostant_table_new`, freed only once.
 */
void kostant_table_free(struct KostantTable *table);

/**
 * Full rendered table (same bytes as `kostant table` on the CLI).
 * `format`: 0 = json, 1 = csv, 2 = markdown. NULL on error.
 *
 * # Safety
 * `lambda` must be a valid NUL-terminated string or NULL.
 */
char *kostant_table_render(uintptr_t n, uintptr_t k, const char *lambda, uint32_t format);

/**
 * Rendered classification at the evaluation point `t` given as "p" or
 * "p/q" (e.g. "1/2"). NULL on error.
 *
 * # Safety
 * `lambda` and `t` must be valid NUL-terminated strings or NULL.
 */
char *kostant_classify_render(uintptr_t n,
                              uintptr_t k,
                              const char *lambda,
                              const char *t,
                              uint32_t format);

/**
 * Verdict for one representative (I, J) under the given analytic flags,
 * rendered as by the CLI. `i_csv`/`j_csv` are comma-separated 1-based
 * index lists; empty strings name the empty set. NULL on error.
 *
 * # Safety
 * `lambda`, `i_csv` and `j_csv` must be valid NUL-terminated strings or
 * NULL.
 */
char *kostant_verdict_render(uintptr_t n,
                             uintptr_t k,
                             const char *lambda,
                             const char *i_csv,
                             const char *j_csv,
                             bool sigma_self_dual,
                             bool omega_trivial,
                             enum KostantFlag l_half_nonzero,
                             enum KostantFlag rs_pole_at_one,
                             bool lift_from_so_k,
                             bool local_kernel,
                             uint32_t format);

/**
 * Degree data for (n, k): the cuspidal ranges plus, when requested, the
 * residual window at `t_twice/2` (pass `has_t = false` to skip). NULL on
 * error.
 */
char *kostant_degrees_render(uintptr_t n,
                             uintptr_t k,
                             bool has_t,
                             int64_t t_twice,
                             uint32_t format);

/**
 * Runs the verification suite over the box n <= n_max, k <= k_max,
 * dominant lambda entries <= lambda_cap. Returns Ok on a clean pass,
 * VerificationFailed if any check failed, InvalidArgument on cap
 * violations. When `report_json_out` is non-NULL it receives the JSON
 * report (caller frees).
 *
 * # Safety
 * `report_json_out`, when non-NULL, must point to writable memory for one
 * pointer.
 */
enum KostantStatus kostant_verify(uintptr_t n_max,
                                  uintptr_t k_max,
                                  int64_t lambda_cap,
                                  char **report_json_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KOSTANT_H */
