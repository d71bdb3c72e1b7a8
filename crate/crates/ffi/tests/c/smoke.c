#include <math.h>
#include <stdio.h>
#include "fh_blend.h"

int main(void) {
    double ys[17];
    for (int i = 0; i <= 16; i++) {
        double x = -5.0 + 10.0 * i / 16.0;
        ys[i] = 1.0 / (1.0 + x * x);
    }
    FhbInterpolant *h = NULL;
    if (fhb_interpolant_new_equispaced(-5.0, 5.0, ys, 17, 8, 4, &h) != FHB_STATUS_OK) {
        return 1;
    }
    double v = 0.0;
    if (fhb_interpolant_eval(h, 0.0, &v) != FHB_STATUS_OK || v != 1.0) {
        return 2;
    }
    FhbInterpolant *bad = NULL;
    FhbStatus s = fhb_interpolant_new_equispaced(-5.0, 5.0, ys, 17, 8, 9, &bad);
    if (s != FHB_STATUS_END_COUNT_OUT_OF_RANGE || bad != NULL) {
        return 3;
    }
    if (fhb_interpolant_eval(h, 0.3, &v) != FHB_STATUS_OK) {
        return 4;
    }
    printf("%.17g\n", v);
    fhb_interpolant_free(h);
    return 0;
}
