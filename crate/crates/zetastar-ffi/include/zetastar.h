/* C interface to the zetastar engine. */

#ifndef ZETASTAR_H
#define ZETASTAR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Product selector for [`zs_product`].
typedef enum ZsProduct {
  ZS_PRODUCT_HARMONIC = 0,
  ZS_PRODUCT_TILDE = 1,
  ZS_PRODUCT_SHUFFLE = 2,
} ZsProduct;

// Status code returned by every fallible call.
typedef enum ZsStatus {
  ZS_STATUS_OK = 0,
  ZS_STATUS_NULL_POINTER = 1,
  ZS_STATUS_INVALID_UTF8 = 2,
  ZS_STATUS_INVALID_ARGUMENT = 3,
  ZS_STATUS_PARSE_ERROR = 4,
  ZS_STATUS_NOT_ADMISSIBLE = 5,
  ZS_STATUS_NOT_IN_H1 = 6,
  ZS_STATUS_NOT_IN_H0 = 7,
  ZS_STATUS_DIVERGENT_EVALUATION = 8,
  ZS_STATUS_PRECISION_INSUFFICIENT = 9,
  ZS_STATUS_IO = 10,
  ZS_STATUS_INTERNAL = 11,
} ZsStatus;

// Opaque evaluation engine.
typedef struct ZsEngine ZsEngine;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static string; do not free.
const char *zs_version(void);

// Last error message for this thread, or null. Free with
// [`zs_string_free`].
char *zs_last_error_message(void);

// Release a string returned by this library.
//
// # Safety
// `s` must be null or a pointer previously returned by this library and
// not yet freed.
void zs_string_free(char *s);

// Create an engine with the given digit budget (`guard` extra working
// digits). Returns null on invalid arguments.
struct ZsEngine *zs_engine_new(uint32_t digits, uint32_t guard);

// Create an engine backed by a persistent value cache in `cache_dir`.
//
// # Safety
// `cache_dir` must be a valid NUL-terminated string.
struct ZsEngine *zs_engine_new_with_cache(uint32_t digits, uint32_t guard, const char *cache_dir);

// Set the reconstruction denominator budget (0 restores the default).
//
// # Safety
// `engine` must be a live pointer from `zs_engine_new*`.
enum ZsStatus zs_engine_set_qmax(struct ZsEngine *engine, uint64_t qmax);

// Destroy an engine.
//
// # Safety
// `engine` must be null or a pointer from `zs_engine_new*`, not yet freed.
void zs_engine_free(struct ZsEngine *engine);

// Evaluate an admissible index (`star` selects the zeta-star value) and
// write its decimal value.
//
// # Safety
// `engine` must be live; `index` a valid string; `out_value` writable.
enum ZsStatus zs_eval(const struct ZsEngine *engine,
                      const char *index,
                      bool star,
                      char **out_value);

// Like [`zs_eval`] but writes a JSON record
// `{"index", "star", "digits", "value", "err"}`.
//
// # Safety
// As [`zs_eval`].
enum ZsStatus zs_eval_json(const struct ZsEngine *engine,
                           const char *index,
                           bool star,
                           char **out_json);

// Multiply two inputs (compositions like `3,1` or polynomials like
// `xy + 2 xxy`) under the selected product and write the canonical
// polynomial string.
//
// # Safety
// `lhs`, `rhs` must be valid strings; `out_poly` writable.
enum ZsStatus zs_product(enum ZsProduct kind, const char *lhs, const char *rhs, char **out_poly);

// Apply the star-transfer map `d` (optionally via the prefix-sum
// recursion route) and write the canonical polynomial string.
//
// # Safety
// `input` must be a valid string; `out_poly` writable.
enum ZsStatus zs_dmap(const char *input, bool via_key_identity, char **out_poly);

// Shuffle-regularize an `H1` polynomial and write the canonical string.
//
// # Safety
// `input` must be a valid string; `out_poly` writable.
enum ZsStatus zs_reg(const char *input, char **out_poly);

// Evaluate an index and reconstruct it against `pi^pi_power`; writes a
// JSON reconstruction record.
//
// # Safety
// `engine` must be live; `index` valid; `out_json` writable.
enum ZsStatus zs_reconstruct_index(const struct ZsEngine *engine,
                                   const char *index,
                                   bool star,
                                   uint32_t pi_power,
                                   char **out_json);

// Reconstruct a literal decimal value against `pi^pi_power`; writes a
// JSON reconstruction record.
//
// # Safety
// `engine` must be live; `value` valid; `out_json` writable.
enum ZsStatus zs_reconstruct_value(const struct ZsEngine *engine,
                                   const char *value,
                                   uint32_t pi_power,
                                   char **out_json);

// Run one orbit-sum membership check (`variant` 0 appends a zero slot,
// 1 bumps the last slot) on the comma-separated vector; writes a JSON
// record with the reconstruction. `out_accepted` receives the verdict.
//
// # Safety
// `engine` must be live; `vector` valid; out-pointers writable.
enum ZsStatus zs_orbit_sum(const struct ZsEngine *engine,
                           const char *vector,
                           uint32_t variant,
                           bool *out_accepted,
                           char **out_json);

// Membership check for the two-insertion star sum at `n`.
//
// # Safety
// `engine` must be live; out-pointers writable.
enum ZsStatus zs_two_insertion_membership(const struct ZsEngine *engine,
                                          uint32_t n,
                                          bool *out_accepted,
                                          char **out_json);

// Run one exact identity check. Suites: `alpha`, `beta`, `families`,
// `reduction`, `power`, `block` (parameterized by `n`/`l` and `a, b, c`)
// and `weight6` (no parameters). `out_holds` receives the verdict.
//
// # Safety
// `suite` must be a valid string; out-pointers writable.
enum ZsStatus zs_verify(const char *suite,
                        uint32_t n,
                        uint32_t a,
                        uint32_t b,
                        uint32_t c,
                        bool *out_holds,
                        char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZETASTAR_H */
