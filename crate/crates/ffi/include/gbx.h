#ifndef GBX_H
#define GBX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define GBX_KIND_TI 0

#define GBX_KIND_TJ 1

#define GBX_KIND_TIJ 2

#define GBX_CURVE_CIRCLE 0

#define GBX_CURVE_LORENTZIAN_CIRCLE 1

#define GBX_CURVE_SPIRAL 2

#define GBX_CURVE_HYPERBOLIC_SPIRAL 3

#define GBX_FORMAT_CSV 0

#define GBX_FORMAT_OBJ 1

typedef enum GbxStatus {
  GBX_STATUS_OK = 0,
  GBX_STATUS_NULL_POINTER = 1,
  GBX_STATUS_INVALID_PARAMS = 2,
  GBX_STATUS_NON_FINITE = 3,
  GBX_STATUS_NOT_INVERTIBLE = 4,
  GBX_STATUS_NOT_ON_HYPERQUADRIC = 5,
  GBX_STATUS_INDEX_NOT_IN_BASIS = 6,
  GBX_STATUS_CASE_MISMATCH = 7,
  GBX_STATUS_UNSUPPORTED_PARAMS = 8,
  GBX_STATUS_DEGENERATE = 9,
  GBX_STATUS_INVALID_ARGUMENT = 10,
  GBX_STATUS_IO = 11,
  GBX_STATUS_INTERNAL = 12,
} GbxStatus;

/**
 * Opaque algebra parameters `(α, β)`.
 */
typedef struct GbxAlgebra GbxAlgebra;

/**
 * Opaque tensor product surface.
 */
typedef struct GbxSurface GbxSurface;

/**
 * Coefficients on the basis `1, i, j, ij`.
 */
typedef struct GbxNumber {
  double c1;
  double c2;
  double c3;
  double c4;
} GbxNumber;

typedef struct GbxFundamentalForm {
  double g11;
  double g12;
  double g22;
} GbxFundamentalForm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or an empty string.
 * Valid until the next call into this library on the same thread.
 */
const char *gbx_last_error(void);

/**
 * Static description of a status code; unknown codes get a generic text.
 */
const char *gbx_status_message(uint32_t status);

/**
 * Creates an algebra handle. Free it with [`gbx_algebra_free`].
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum GbxStatus gbx_algebra_new(double alpha, double beta, struct GbxAlgebra **out);

/**
 * # Safety
 * `algebra` must come from [`gbx_algebra_new`] and not be freed twice.
 */
void gbx_algebra_free(struct GbxAlgebra *algebra);

/**
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum GbxStatus gbx_multiply(const struct GbxAlgebra *algebra,
                            struct GbxNumber x,
                            struct GbxNumber y,
                            struct GbxNumber *out);

/**
 * Conjugation `kind` (a `GBX_KIND_*` code) of `x`.
 *
 * # Safety
 * `out` must be writable.
 */
enum GbxStatus gbx_conjugate(uint32_t kind_code, struct GbxNumber x, struct GbxNumber *out);

/**
 * Real part and single imaginary residual of `x · x^k`.
 *
 * # Safety
 * Pointers must be valid; outputs must be writable.
 */
enum GbxStatus gbx_norm_form(const struct GbxAlgebra *algebra,
                             uint32_t kind_code,
                             struct GbxNumber x,
                             double *scalar,
                             double *residual);

/**
 * Writes the 4x4 representation matrix row-major into `out[16]`.
 *
 * # Safety
 * `out` must be valid for 16 writes.
 */
enum GbxStatus gbx_rep_matrix(const struct GbxAlgebra *algebra, struct GbxNumber x, double *out);

/**
 * Algebra inverse; fails with `NotInvertible` on zero divisors.
 *
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum GbxStatus gbx_inverse(const struct GbxAlgebra *algebra,
                           struct GbxNumber x,
                           struct GbxNumber *out);

/**
 * Value of the bilinear constraint cutting out hyperquadric `kind`.
 *
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum GbxStatus gbx_constraint_value(const struct GbxAlgebra *algebra,
                                    uint32_t kind_code,
                                    struct GbxNumber x,
                                    double *out);

/**
 * Group product of two members of hyperquadric `kind`.
 *
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum GbxStatus gbx_group_product(const struct GbxAlgebra *algebra,
                                 uint32_t kind_code,
                                 struct GbxNumber x,
                                 struct GbxNumber y,
                                 struct GbxNumber *out);

/**
 * Group inverse `x^k / N_x` of a member of hyperquadric `kind`.
 *
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum GbxStatus gbx_group_inverse(const struct GbxAlgebra *algebra,
                                 uint32_t kind_code,
                                 struct GbxNumber x,
                                 struct GbxNumber *out);

/**
 * Left-invariant basis field `X_m` (m in 1..=4) of group `kind` at `x`.
 *
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum GbxStatus gbx_basis_field(const struct GbxAlgebra *algebra,
                               uint32_t kind_code,
                               uint8_t m,
                               struct GbxNumber x,
                               struct GbxNumber *out);

/**
 * Surface from explicit curve kinds and rates. Fails with `CaseMismatch`
 * when the kinds do not fit `(rule, α, β)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum GbxStatus gbx_surface_new(uint32_t rule_code,
                               double alpha,
                               double beta,
                               uint32_t curve_gamma,
                               double rate_gamma,
                               uint32_t curve_delta,
                               double rate_delta,
                               struct GbxSurface **out);

/**
 * Surface with the curve kinds the case table requires: circles for zero
 * rates, spirals otherwise.
 *
 * # Safety
 * `out` must be writable.
 */
enum GbxStatus gbx_surface_for_case(uint32_t rule_code,
                                    double alpha,
                                    double beta,
                                    double rate_gamma,
                                    double rate_delta,
                                    struct GbxSurface **out);

/**
 * # Safety
 * `surface` must come from a `gbx_surface_*` constructor and not be freed
 * twice.
 */
void gbx_surface_free(struct GbxSurface *surface);

/**
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum GbxStatus gbx_surface_evaluate(const struct GbxSurface *surface,
                                    double t,
                                    double s,
                                    struct GbxNumber *out);

/**
 * `∂f/∂t` and `∂f/∂s` in ambient coordinates.
 *
 * # Safety
 * Pointers must be valid; outputs must be writable.
 */
enum GbxStatus gbx_surface_tangents(const struct GbxSurface *surface,
                                    double t,
                                    double s,
                                    struct GbxNumber *dt,
                                    struct GbxNumber *ds);

/**
 * # Safety
 * Pointers must be valid; `out` must be writable.
 */
enum GbxStatus gbx_surface_fundamental_form(const struct GbxSurface *surface,
                                            double t,
                                            double s,
                                            struct GbxFundamentalForm *out);

/**
 * Orthonormal tangent frame; `Degenerate` on lightlike directions.
 *
 * # Safety
 * Pointers must be valid; outputs must be writable.
 */
enum GbxStatus gbx_surface_frame(const struct GbxSurface *surface,
                                 double t,
                                 double s,
                                 struct GbxNumber *e1,
                                 struct GbxNumber *e2);

/**
 * Writes an `nt` x `ns` grid over `[t_min, t_max] x [s_min, s_max]` to the
 * UTF-8 `path` as CSV or OBJ (`GBX_FORMAT_*`).
 *
 * # Safety
 * `surface` must be valid and `path` a NUL-terminated string.
 */
enum GbxStatus gbx_surface_export_mesh(const struct GbxSurface *surface,
                                       double t_min,
                                       double t_max,
                                       double s_min,
                                       double s_max,
                                       size_t nt,
                                       size_t ns,
                                       uint32_t format,
                                       const char *path);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GBX_H */
