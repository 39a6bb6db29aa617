/* Minimal C consumer: solve one matrix and print its families.
 *
 * Build (from the repository root):
 *   cargo build -p octeig-capi
 *   cc crates/octeig-capi/examples/smoke.c \
 *      -Icrates/octeig-capi/include \
 *      target/debug/libocteig_capi.a -lm -o smoke
 */
#include "octeig.h"
#include <stdio.h>

int main(void) {
  const double diag[3] = {0.0, 0.0, 0.0};
  const double a[8] = {0, 1, 0, 0, 0, 0, 0, 0}; /* i  */
  const double b[8] = {0, 0, 1, 0, 0, 0, 0, 0}; /* j  */
  const double c[8] = {0, 0, 0, 0, 1, 0, 0, 0}; /* l  */

  OcteigHerm3 *h = NULL;
  if (octeig_herm3_new(diag, a, b, c, &h) != OCTEIG_STATUS_OK) {
    fprintf(stderr, "construction failed\n");
    return 1;
  }

  OcteigSpectrum *spec = NULL;
  if (octeig_herm3_solve(h, &spec) != OCTEIG_STATUS_OK) {
    fprintf(stderr, "solve failed\n");
    octeig_herm3_free(h);
    return 1;
  }

  size_t families = 0;
  octeig_spectrum_family_count(spec, &families);
  for (size_t f = 0; f < families; ++f) {
    double r = 0.0, lams[3] = {0};
    octeig_spectrum_r_value(spec, f, &r);
    octeig_spectrum_eigenvalues(spec, f, lams);
    printf("family r = %+.3f: eigenvalues %+.6f %+.6f %+.6f\n", r, lams[0],
           lams[1], lams[2]);
  }

  octeig_spectrum_free(spec);
  octeig_herm3_free(h);
  return 0;
}
