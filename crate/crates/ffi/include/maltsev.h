#ifndef MALTSEV_H
#define MALTSEV_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MwStatus {
  MW_STATUS_OK = 0,
  /**
   * A definitive negative answer, e.g. no Mal'tsev term exists.
   */
  MW_STATUS_NOT_FOUND = 1,
  MW_STATUS_NULL_POINTER = 2,
  MW_STATUS_INVALID_UTF8 = 3,
  MW_STATUS_PARSE = 4,
  MW_STATUS_INVALID_ALGEBRA = 5,
  MW_STATUS_BUDGET_EXHAUSTED = 6,
  MW_STATUS_PANIC = 7,
} MwStatus;

/**
 * Opaque handle to a finite algebra.
 */
typedef struct MwAlgebra MwAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Normal form of a `mu`-term.
 *
 * # Safety
 * `term` must be a NUL-terminated string and `out` a valid pointer.
 */
enum MwStatus mw_normalize(const char *term, char **out);

/**
 * Equality in the free Mal'tsev algebra.
 *
 * # Safety
 * `lhs` and `rhs` must be NUL-terminated strings and `out` a valid pointer.
 */
enum MwStatus mw_equal(const char *lhs, const char *rhs, bool *out);

/**
 * Freely reduces a space-separated word such as `x y^-1`.
 *
 * # Safety
 * `word` must be a NUL-terminated string and `out` a valid pointer.
 */
enum MwStatus mw_fg_reduce(const char *word, char **out);

/**
 * `a b^-1 c` on heap words.
 *
 * # Safety
 * `a`, `b`, `c` must be NUL-terminated strings and `out` a valid pointer.
 */
enum MwStatus mw_heap_mu(const char *a, const char *b, const char *c, char **out);

/**
 * Loads an algebra document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum MwStatus mw_algebra_from_json(const char *json, struct MwAlgebra **out);

/**
 * Releases a handle from [`mw_algebra_from_json`]. Null is ignored.
 *
 * # Safety
 * `alg` must be null or a handle not yet freed.
 */
void mw_algebra_free(struct MwAlgebra *alg);

/**
 * # Safety
 * `alg` must be a live handle and `out` a valid pointer.
 */
enum MwStatus mw_algebra_size(const struct MwAlgebra *alg, size_t *out);

/**
 * Whether the ternary operation `symbol` satisfies the Mal'tsev identities.
 *
 * # Safety
 * `alg` must be a live handle, `symbol` a NUL-terminated string and `out` a
 * valid pointer.
 */
enum MwStatus mw_algebra_is_maltsev(const struct MwAlgebra *alg, const char *symbol, bool *out);

/**
 * Number of congruences; carriers larger than `limit` are rejected with
 * `MW_STATUS_BUDGET_EXHAUSTED`.
 *
 * # Safety
 * `alg` must be a live handle and `out` a valid pointer.
 */
enum MwStatus mw_algebra_congruence_count(const struct MwAlgebra *alg, size_t limit, size_t *out);

/**
 * Searches for a Mal'tsev term. On `MW_STATUS_OK` the term is written to
 * `out`; `MW_STATUS_NOT_FOUND` means no term exists, and
 * `MW_STATUS_BUDGET_EXHAUSTED` that the search was cut off. `out` is left
 * untouched in the latter two cases.
 *
 * # Safety
 * `alg` must be a live handle and `out` a valid pointer.
 */
enum MwStatus mw_algebra_find_maltsev_term(const struct MwAlgebra *alg, size_t budget, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void mw_string_free(char *s);

/**
 * Message for the last failure on this thread, or null. The pointer is valid
 * until the next call into this library on the same thread.
 */
const char *mw_last_error_message(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* MALTSEV_H */
