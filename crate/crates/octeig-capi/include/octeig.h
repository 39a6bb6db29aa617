/* C ABI for the octeig octonionic eigensolver. */

#ifndef OCTEIG_H
#define OCTEIG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes for every entry point.
 */
typedef enum OcteigStatus {
  /**
   * Success.
   */
  OCTEIG_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  OCTEIG_STATUS_NULL_POINTER = 1,
  /**
   * An argument was outside its domain (bad index, bad dimension).
   */
  OCTEIG_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The solver reported a defect; no result was produced.
   */
  OCTEIG_STATUS_SOLVER_FAILURE = 3,
} OcteigStatus;

/**
 * Opaque handle to a 3x3 octonionic Hermitian matrix.
 */
typedef struct OcteigHerm3 OcteigHerm3;

/**
 * Opaque handle to a solved spectrum (one or two eigenvalue families).
 */
typedef struct OcteigSpectrum OcteigSpectrum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Create a 3x3 Hermitian matrix from its diagonal (3 doubles) and the
 * off-diagonal octonions `a`, `b`, `c` (8 doubles each). The caller owns
 * the handle and must release it with [`octeig_herm3_free`].
 *
 * # Safety
 * `diag` must point to 3 readable doubles, `a`, `b`, `c` to 8 each, and
 * `out` must be a valid destination for one pointer.
 */
enum OcteigStatus octeig_herm3_new(const double *diag,
                                   const double *a,
                                   const double *b,
                                   const double *c,
                                   struct OcteigHerm3 **out);

/**
 * Release a matrix handle. Null is a no-op.
 *
 * # Safety
 * `h` must have come from [`octeig_herm3_new`] and not have been freed.
 */
void octeig_herm3_free(struct OcteigHerm3 *h);

/**
 * Write the two roots of `r² + 4Φ r − |[a,b,c]|² = 0` (descending) to
 * `out[0..2]`.
 *
 * # Safety
 * `h` must be a live handle; `out` must hold 2 doubles.
 */
enum OcteigStatus octeig_herm3_r_roots(const struct OcteigHerm3 *h, double *out);

/**
 * Write trace, sigma and determinant to `out[0..3]`.
 *
 * # Safety
 * `h` must be a live handle; `out` must hold 3 doubles.
 */
enum OcteigStatus octeig_herm3_invariants(const struct OcteigHerm3 *h, double *out);

/**
 * Largest coefficient of `A³ − (tr A)A² + σ(A)A − (det A)I`.
 *
 * # Safety
 * `h` must be a live handle; `out` must hold 1 double.
 */
enum OcteigStatus octeig_herm3_char_residual(const struct OcteigHerm3 *h, double *out);

/**
 * Solve the real right-eigenvalue problem. On success the caller owns the
 * spectrum handle and must release it with [`octeig_spectrum_free`].
 *
 * # Safety
 * `h` must be a live handle; `out` must be a valid destination pointer.
 */
enum OcteigStatus octeig_herm3_solve(const struct OcteigHerm3 *h, struct OcteigSpectrum **out);

/**
 * Release a spectrum handle. Null is a no-op.
 *
 * # Safety
 * `s` must have come from [`octeig_herm3_solve`] and not have been freed.
 */
void octeig_spectrum_free(struct OcteigSpectrum *s);

/**
 * Number of families: 2 generically, 1 for complex-type input whose two
 * `r` roots coincide.
 *
 * # Safety
 * `s` must be a live handle; `out` must hold one `size_t`.
 */
enum OcteigStatus octeig_spectrum_family_count(const struct OcteigSpectrum *s, uintptr_t *out);

/**
 * Whether the spectrum is a doubled single family (complex-type input).
 *
 * # Safety
 * `s` must be a live handle; `out` must hold one `bool`.
 */
enum OcteigStatus octeig_spectrum_is_doubled(const struct OcteigSpectrum *s, bool *out);

/**
 * The family's root `r` of the modified characteristic equation.
 *
 * # Safety
 * `s` must be a live handle; `out` must hold 1 double.
 */
enum OcteigStatus octeig_spectrum_r_value(const struct OcteigSpectrum *s,
                                          uintptr_t family,
                                          double *out);

/**
 * The family's three eigenvalues, ascending, written to `out[0..3]`.
 *
 * # Safety
 * `s` must be a live handle; `out` must hold 3 doubles.
 */
enum OcteigStatus octeig_spectrum_eigenvalues(const struct OcteigSpectrum *s,
                                              uintptr_t family,
                                              double *out);

/**
 * One unit eigenvector of the family (index 0..3, matching the ascending
 * eigenvalues), written as 24 doubles: three octonions, component-major.
 *
 * # Safety
 * `s` must be a live handle; `out` must hold 24 doubles.
 */
enum OcteigStatus octeig_spectrum_eigenvector(const struct OcteigSpectrum *s,
                                              uintptr_t family,
                                              uintptr_t index,
                                              double *out);

/**
 * The 24 eigenvalues of the real symmetric embedding, ascending, written
 * to `out[0..24]`. This is the brute-force oracle spectrum; each analytic
 * eigenvalue appears with multiplicity 4 (8 for a doubled family).
 *
 * # Safety
 * `h` must be a live handle; `out` must hold 24 doubles.
 */
enum OcteigStatus octeig_herm3_oracle_spectrum(const struct OcteigHerm3 *h, double *out);

/**
 * Residual of `A v = v λ` for a candidate eigenpair: `v` is 24 doubles,
 * `lambda` real.
 *
 * # Safety
 * `h` must be a live handle; `v` must hold 24 doubles, `out` 1 double.
 */
enum OcteigStatus octeig_herm3_eigen_residual(const struct OcteigHerm3 *h,
                                              const double *v,
                                              double lambda,
                                              double *out);

/**
 * Octonion product `out = a * b`, all three as 8 doubles.
 *
 * # Safety
 * `a` and `b` must hold 8 readable doubles each; `out` 8 writable ones.
 */
enum OcteigStatus octeig_octonion_mul(const double *a, const double *b, double *out);

/**
 * Eigenvalues of a 2x2 Hermitian matrix `[[p, a], [ā, m]]`, ascending,
 * written to `out[0..2]`.
 *
 * # Safety
 * `a` must hold 8 readable doubles; `out` 2 writable ones.
 */
enum OcteigStatus octeig_herm2_eigenvalues(double p, double m, const double *a, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OCTEIG_H */
