#include <math.h>
#include <stdio.h>
#include <string.h>

#include "gbx.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "check failed: %s (line %d)\n", #cond, __LINE__); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    GbxAlgebra *alg = NULL;
    CHECK(gbx_algebra_new(2.0, 3.0, &alg) == GBX_STATUS_OK);

    GbxNumber i = {0.0, 1.0, 0.0, 0.0};
    GbxNumber out = {0};
    CHECK(gbx_multiply(alg, i, i, &out) == GBX_STATUS_OK);
    CHECK(out.c1 == -2.0 && out.c2 == 0.0 && out.c3 == 0.0 && out.c4 == 0.0);

    double m[16];
    CHECK(gbx_rep_matrix(alg, i, m) == GBX_STATUS_OK);
    CHECK(m[1] == -2.0 && m[4] == 1.0);
    gbx_algebra_free(alg);

    GbxAlgebra *bad = NULL;
    CHECK(gbx_algebra_new(0.0, 1.0, &bad) == GBX_STATUS_INVALID_PARAMS);
    CHECK(bad == NULL);
    CHECK(strstr(gbx_last_error(), "nonzero") != NULL);

    GbxSurface *s = NULL;
    CHECK(gbx_surface_for_case(GBX_KIND_TIJ, 1.0, 1.0, 0.0, 0.0, &s) == GBX_STATUS_OK);
    GbxNumber f;
    CHECK(gbx_surface_evaluate(s, 0.5, 0.25, &f) == GBX_STATUS_OK);
    CHECK(fabs(f.c1 - cos(0.5) * cos(0.25)) < 1e-15);
    CHECK(fabs(f.c4 - sin(0.5) * sin(0.25)) < 1e-15);
    gbx_surface_free(s);

    CHECK(gbx_surface_new(GBX_KIND_TI, 1.0, 1.0, GBX_CURVE_CIRCLE, 0.0, GBX_CURVE_CIRCLE, 0.0, &s) ==
          GBX_STATUS_CASE_MISMATCH);
    CHECK(strstr(gbx_last_error(), "lorentzian-circle") != NULL);

    puts("ok");
    return 0;
}
