/* C interface of the circulant Hadamard toolkit. */

#ifndef CHM_FFI_H
#define CHM_FFI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Bit for rotation equivalence in search symmetry masks.
 */
#define CHM_SYMMETRY_ROTATION 1

/**
 * Bit for negation equivalence in search symmetry masks.
 */
#define CHM_SYMMETRY_NEGATION 2

/**
 * Result of an FFI call.
 */
typedef enum ChmStatus {
  CHM_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  CHM_STATUS_NULL_POINTER = 1,
  /**
   * An argument was rejected (bad sign value, odd length, bad config).
   */
  CHM_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A row literal could not be parsed.
   */
  CHM_STATUS_PARSE_ERROR = 3,
  /**
   * Two rows had different lengths.
   */
  CHM_STATUS_LENGTH_MISMATCH = 4,
  /**
   * An index was outside its documented range.
   */
  CHM_STATUS_INDEX_OUT_OF_RANGE = 5,
  /**
   * An internal panic was caught at the boundary.
   */
  CHM_STATUS_PANIC = 6,
} ChmStatus;

/**
 * Opaque handle to a ±1 row.
 */
typedef struct ChmRow {
  uint8_t _private[0];
} ChmRow;

/**
 * Opaque handle to the result of one search run.
 */
typedef struct ChmSearchOutcome {
  uint8_t _private[0];
} ChmSearchOutcome;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a row literal (compact "+---" or comma-separated "+1,-1,-1,-1")
 * into a new row handle.
 */
enum ChmStatus chm_row_parse(const char *literal, struct ChmRow **out);

/**
 * Builds a row from `len` integers that must each be +1 or -1.
 */
enum ChmStatus chm_row_from_signs(const int32_t *signs, uintptr_t len, struct ChmRow **out);

/**
 * Releases a row handle. Null is ignored.
 */
void chm_row_free(struct ChmRow *row);

/**
 * Length of the row, or 0 for a null handle.
 */
uintptr_t chm_row_len(const struct ChmRow *row);

/**
 * Writes the compact "+/-" literal of the row.
 */
enum ChmStatus chm_row_format(const struct ChmRow *row, char **out);

/**
 * New handle holding the row rotated by `shift` (the one-step rotation
 * moves the last entry to the front).
 */
enum ChmStatus chm_row_rotate(const struct ChmRow *row, int64_t shift, struct ChmRow **out);

/**
 * Exact scalar product of two rows of equal length.
 */
enum ChmStatus chm_row_dot(const struct ChmRow *left, const struct ChmRow *right, int64_t *out);

/**
 * Periodic autocorrelation of the row at the given shift.
 */
enum ChmStatus chm_row_paf(const struct ChmRow *row, uintptr_t shift, int64_t *out);

/**
 * Sum of the entries (the all-ones eigenvalue of the circulant matrix).
 */
enum ChmStatus chm_row_ones_eigenvalue(const struct ChmRow *row, int64_t *out);

/**
 * Whether the circulant matrix generated by the row is Hadamard,
 * decided in exact integer arithmetic.
 */
enum ChmStatus chm_row_is_hadamard(const struct ChmRow *row, bool *out);

/**
 * Full verification report (Hadamard status, regularity, identities,
 * spectrum) as a JSON string with sorted keys.
 */
enum ChmStatus chm_verify_report_json(const struct ChmRow *row, double tolerance, char **out);

/**
 * Catalogue report of the ten known matrices as a JSON string.
 */
enum ChmStatus chm_known_report_json(double tolerance, char **out);

/**
 * Runs an exhaustive search. `symmetry` is a mask of the CHM_SYMMETRY_*
 * bits; `node_limit` 0 means unlimited. The outcome handle must be
 * released with `chm_search_outcome_free`.
 */
enum ChmStatus chm_search(uintptr_t order,
                          bool use_regularity_filter,
                          bool use_paf_pruning,
                          uint32_t symmetry,
                          uintptr_t worker_count,
                          uint64_t node_limit,
                          bool emit_all,
                          struct ChmSearchOutcome **out);

/**
 * Releases a search outcome handle. Null is ignored.
 */
void chm_search_outcome_free(struct ChmSearchOutcome *outcome);

/**
 * Number of solutions including symmetry copies; 0 for null.
 */
uint64_t chm_search_outcome_raw_count(const struct ChmSearchOutcome *outcome);

/**
 * Number of solution orbits; 0 for null.
 */
uint64_t chm_search_outcome_canonical_count(const struct ChmSearchOutcome *outcome);

/**
 * Entry assignments performed by the run; 0 for null.
 */
uint64_t chm_search_outcome_nodes_explored(const struct ChmSearchOutcome *outcome);

/**
 * False when a node limit stopped the run early (or for null).
 */
bool chm_search_outcome_complete(const struct ChmSearchOutcome *outcome);

/**
 * Whether every emitted solution passed independent re-verification.
 */
bool chm_search_outcome_verified(const struct ChmSearchOutcome *outcome);

/**
 * Number of emitted rows (raw or canonical per the run's configuration).
 */
uintptr_t chm_search_outcome_solution_count(const struct ChmSearchOutcome *outcome);

/**
 * Writes the compact literal of the emitted row at `index`.
 */
enum ChmStatus chm_search_outcome_solution(const struct ChmSearchOutcome *outcome,
                                           uintptr_t index,
                                           char **out);

/**
 * Full search report as a JSON string; timing (and with it the worker
 * count) is included only on request so outputs stay byte-comparable.
 */
enum ChmStatus chm_search_outcome_report_json(const struct ChmSearchOutcome *outcome,
                                              bool include_timing,
                                              char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void chm_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHM_FFI_H */
