#ifndef SHORTLOC_H
#define SHORTLOC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum SlStatus {
  SL_STATUS_OK = 0,
  SL_STATUS_NULL_POINTER = 1,
  SL_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed input: bad JSON, shapes, non-prime modulus, span deficiency.
   */
  SL_STATUS_INVALID_INPUT = 3,
  SL_STATUS_UNKNOWN_PRESET = 4,
  /**
   * The module has Loewy length greater than 2.
   */
  SL_STATUS_NOT_LOEWY2 = 5,
  /**
   * The output buffer is too small; the required length is reported.
   */
  SL_STATUS_BUFFER_TOO_SMALL = 6,
  /**
   * Any other error raised by a computation.
   */
  SL_STATUS_COMPUTATION = 7,
  /**
   * A panic was caught at the boundary.
   */
  SL_STATUS_PANIC = 8,
} SlStatus;

/**
 * An immutable short local algebra.
 */
typedef struct SlAlgebra SlAlgebra;

/**
 * An immutable module, holding a reference to its algebra.
 */
typedef struct SlModule SlModule;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty if none. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *sl_last_error_message(void);

/**
 * Built-in algebra by name. `p = 0` selects the default prime 32003.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SlStatus sl_algebra_preset(const char *name, uint32_t p, struct SlAlgebra **out);

/**
 * Algebra from the JSON algebra file format.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SlStatus sl_algebra_from_json(const char *json, struct SlAlgebra **out);

/**
 * # Safety
 * `alg` must come from this library and not be used afterwards; null is ignored.
 */
void sl_algebra_free(struct SlAlgebra *alg);

/**
 * # Safety
 * All pointers must be valid.
 */
enum SlStatus sl_algebra_hilbert_type(const struct SlAlgebra *alg, size_t *e, size_t *a);

/**
 * # Safety
 * All pointers must be valid.
 */
enum SlStatus sl_algebra_is_commutative(const struct SlAlgebra *alg, bool *out);

/**
 * The simple module `S = A/J`.
 *
 * # Safety
 * All pointers must be valid.
 */
enum SlStatus sl_module_simple(const struct SlAlgebra *alg, struct SlModule **out);

/**
 * The free module `A^t`.
 *
 * # Safety
 * All pointers must be valid.
 */
enum SlStatus sl_module_free_module(const struct SlAlgebra *alg, size_t t, struct SlModule **out);

/**
 * A distinguished module of a preset (`"S"` is the simple module).
 *
 * # Safety
 * Strings must be NUL-terminated and `out` valid.
 */
enum SlStatus sl_module_preset(const char *preset,
                               const char *module,
                               uint32_t p,
                               struct SlModule **out);

/**
 * Module from the JSON module file format over `alg`; an `algebra` entry
 * in the JSON is ignored.
 *
 * # Safety
 * All pointers must be valid and `json` NUL-terminated.
 */
enum SlStatus sl_module_from_json(const struct SlAlgebra *alg,
                                  const char *json,
                                  struct SlModule **out);

/**
 * # Safety
 * `m` must come from this library and not be used afterwards; null is ignored.
 */
void sl_module_free(struct SlModule *m);

/**
 * Dimension vector `(t(M), |JM|)`; fails with `NotLoewy2` when `J^2 M != 0`.
 *
 * # Safety
 * All pointers must be valid.
 */
enum SlStatus sl_module_dimension(const struct SlModule *m, uint64_t *top, uint64_t *rad);

/**
 * Writes `t_0..t_n` into `buf`. `written` receives the number of values
 * computed (fewer than `n + 1` when the dimension cap stops the run, in
 * which case `truncated` is set). If `buf_len` is too small nothing is
 * written, `written` holds the required length and `BufferTooSmall` is
 * returned. `cap = 0` selects the default cap.
 *
 * # Safety
 * `buf` must point to `buf_len` writable values; other pointers valid.
 */
enum SlStatus sl_betti_numbers(const struct SlModule *m,
                               size_t n,
                               size_t cap,
                               uint64_t *buf,
                               size_t buf_len,
                               size_t *written,
                               bool *truncated);

/**
 * # Safety
 * All pointers must be valid.
 */
enum SlStatus sl_is_aligned(const struct SlModule *m, bool *out);

/**
 * Koszul-up-to-`n` verdict. `first_failure` receives the first `n` with
 * `dim Omega^n M != omega^n dim M`, or -1.
 *
 * # Safety
 * All pointers must be valid.
 */
enum SlStatus sl_koszul_up_to(const struct SlModule *m,
                              size_t n,
                              size_t cap,
                              bool *out,
                              int64_t *first_failure);

/**
 * Spectral radius of `omega(e, a)`.
 *
 * # Safety
 * `out` must be valid.
 */
enum SlStatus sl_spectral_radius(uint64_t e, uint64_t a, double *out);

/**
 * Betti report as JSON; release the string with [`sl_string_free`].
 *
 * # Safety
 * All pointers must be valid.
 */
enum SlStatus sl_betti_report_json(const struct SlModule *m, size_t n, size_t cap, char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards; null is ignored.
 */
void sl_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SHORTLOC_H */
