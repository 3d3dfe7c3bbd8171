#ifndef THETA_H
#define THETA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. `Ok` is zero; the others mirror the library error codes,
 * followed by failures specific to the boundary.
 */
typedef enum ThetaStatus {
  THETA_STATUS_OK = 0,
  THETA_STATUS_INVALID_SPACE = 1,
  THETA_STATUS_MISMATCHED_TYPE = 2,
  THETA_STATUS_NOT_EMBEDDABLE = 3,
  THETA_STATUS_BAD_SIGN = 4,
  THETA_STATUS_NOT_ADMISSIBLE = 5,
  THETA_STATUS_BAD_SHAPE = 6,
  THETA_STATUS_BOUND_EXCEEDED = 7,
  THETA_STATUS_UNSUPPORTED_REAL_CLOSURE = 8,
  THETA_STATUS_INCOMPATIBLE_PAIR = 9,
  THETA_STATUS_NOT_IN_IMAGE = 10,
  THETA_STATUS_EMPTY_LIFT = 11,
  THETA_STATUS_AMBIGUOUS_MAXIMUM = 12,
  THETA_STATUS_NOT_NILPOTENT = 13,
  THETA_STATUS_NOT_IN_ALGEBRA = 14,
  THETA_STATUS_IDENTITY_VIOLATED = 15,
  THETA_STATUS_NOT_DESCENT_PAIR = 16,
  THETA_STATUS_INCOMPARABLE_SUPPORTS = 17,
  THETA_STATUS_NONPOSITIVE_DIM_CIRC = 18,
  THETA_STATUS_UNSUPPORTED = 19,
  THETA_STATUS_PARSE = 20,
  THETA_STATUS_NULL_POINTER = 100,
  THETA_STATUS_INVALID_UTF8 = 101,
  THETA_STATUS_INDEX_OUT_OF_RANGE = 102,
} ThetaStatus;

/**
 * The result of a generalized descent.
 */
typedef struct ThetaDescent ThetaDescent;

/**
 * A formed space.
 */
typedef struct ThetaSpace ThetaSpace;

/**
 * An admissible tableau, i.e. a nilpotent orbit.
 */
typedef struct ThetaTableau ThetaTableau;

/**
 * A list of tableaux.
 */
typedef struct ThetaTableauList ThetaTableauList;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The library version as a static NUL-terminated string.
 */
const char *theta_version(void);

/**
 * Copy of the last error on this thread as JSON `{code, message,
 * context}`, or NULL if no call has failed. Free with
 * [`theta_string_free`].
 */
char *theta_last_error(void);

void theta_clear_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library.
 */
void theta_string_free(char *s);

/**
 * Parse a formed space, e.g. `{"base":"C","division":"C","epsilon":-1,"dim":4}`.
 *
 * # Safety
 * `json` must be a valid C string and `out` a valid pointer.
 */
enum ThetaStatus theta_space_from_json(const char *json, struct ThetaSpace **out);

/**
 * # Safety
 * `space` must be a live handle and `out` a valid pointer.
 */
enum ThetaStatus theta_space_to_json(const struct ThetaSpace *space, char **out);

/**
 * Dimension over the division algebra.
 *
 * # Safety
 * `space` must be a live handle and `out` a valid pointer.
 */
enum ThetaStatus theta_space_dim(const struct ThetaSpace *space, uint32_t *out);

/**
 * # Safety
 * `space` must be NULL or a handle not yet freed.
 */
void theta_space_free(struct ThetaSpace *space);

/**
 * Parse and validate a tableau.
 *
 * # Safety
 * `json` must be a valid C string and `out` a valid pointer.
 */
enum ThetaStatus theta_tableau_from_json(const char *json, struct ThetaTableau **out);

/**
 * # Safety
 * `tab` must be a live handle and `out` a valid pointer.
 */
enum ThetaStatus theta_tableau_to_json(const struct ThetaTableau *tab, char **out);

/**
 * One line per row length with the multiplicity form in brackets.
 *
 * # Safety
 * `tab` must be a live handle and `out` a valid pointer.
 */
enum ThetaStatus theta_tableau_render(const struct ThetaTableau *tab, char **out);

/**
 * Lie algebra dimension of the stabilizer.
 *
 * # Safety
 * `tab` must be a live handle and `out` a valid pointer.
 */
enum ThetaStatus theta_tableau_stabilizer_dim(const struct ThetaTableau *tab, uint32_t *out);

/**
 * # Safety
 * `tab` must be NULL or a handle not yet freed.
 */
void theta_tableau_free(struct ThetaTableau *tab);

/**
 * All nilpotent orbits of a space, in canonical order.
 *
 * # Safety
 * `space` must be a live handle and `out` a valid pointer.
 */
enum ThetaStatus theta_enumerate_orbits(const struct ThetaSpace *space,
                                        struct ThetaTableauList **out);

/**
 * # Safety
 * `list` must be a live handle.
 */
size_t theta_list_len(const struct ThetaTableauList *list);

/**
 * A fresh copy of element `i`; free it with [`theta_tableau_free`].
 *
 * # Safety
 * `list` must be a live handle and `out` a valid pointer.
 */
enum ThetaStatus theta_list_get(const struct ThetaTableauList *list,
                                size_t i,
                                struct ThetaTableau **out);

/**
 * # Safety
 * `list` must be NULL or a handle not yet freed.
 */
void theta_list_free(struct ThetaTableauList *list);

/**
 * Generalized descent of `orbit_prime` to the space `v`.
 *
 * # Safety
 * Handles must be live and `out` a valid pointer.
 */
enum ThetaStatus theta_descend(const struct ThetaTableau *orbit_prime,
                               const struct ThetaSpace *v,
                               struct ThetaDescent **out);

/**
 * # Safety
 * `dr` must be a live handle and `out` a valid pointer.
 */
enum ThetaStatus theta_descent_to_json(const struct ThetaDescent *dr, char **out);

/**
 * # Safety
 * `dr` must be a live handle and `out` a valid pointer.
 */
enum ThetaStatus theta_descent_target(const struct ThetaDescent *dr, struct ThetaTableau **out);

/**
 * # Safety
 * `dr` must be a live handle and `out` a valid pointer.
 */
enum ThetaStatus theta_descent_is_strict(const struct ThetaDescent *dr, bool *out);

/**
 * Stabilizer factorization of the pair as JSON.
 *
 * # Safety
 * `dr` must be a live handle and `out` a valid pointer.
 */
enum ThetaStatus theta_descent_factorization(const struct ThetaDescent *dr, char **out);

/**
 * # Safety
 * `dr` must be NULL or a handle not yet freed.
 */
void theta_descent_free(struct ThetaDescent *dr);

/**
 * Theta lift of `orbit` to the space `vp`.
 *
 * # Safety
 * Handles must be live and `out` a valid pointer.
 */
enum ThetaStatus theta_lift(const struct ThetaTableau *orbit,
                            const struct ThetaSpace *vp,
                            struct ThetaTableau **out);

/**
 * Whether `nu` (a rational such as `"3/2"`) lies in the convergent range
 * of the pair `(v, vp)`.
 *
 * # Safety
 * `nu` must be a valid C string, handles live and `out` a valid pointer.
 */
enum ThetaStatus theta_in_range(const char *nu,
                                const struct ThetaSpace *v,
                                const struct ThetaSpace *vp,
                                bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* THETA_H */
