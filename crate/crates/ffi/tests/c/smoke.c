#include <math.h>
#include <stdio.h>
#include "precision_lda.h"

#define CHECK(call)                                                   \
    do {                                                              \
        PldaStatus s_ = (call);                                       \
        if (s_ != PLDA_STATUS_OK) {                                   \
            char msg_[256];                                           \
            plda_last_error_message(msg_, sizeof msg_);               \
            fprintf(stderr, "%s failed (%d): %s\n", #call, s_, msg_); \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    double s[4] = {2.0, 0.5, 0.5, 1.0};
    PldaMatrix *sigma = NULL, *theta = NULL;
    size_t iters = 0;
    CHECK(plda_matrix_new(s, 2, &sigma));
    CHECK(plda_glasso(sigma, 0.0, 0, &theta, &iters));
    double t[4];
    CHECK(plda_matrix_copy(theta, t, 4));
    /* inverse of [[2, .5], [.5, 1]] is [[1, -.5], [-.5, 2]] / 1.75 */
    if (fabs(t[0] - 1.0 / 1.75) > 1e-8 || fabs(t[1] + 0.5 / 1.75) > 1e-8) {
        fprintf(stderr, "unexpected inverse %g %g\n", t[0], t[1]);
        return 1;
    }

    double x[8] = {1.0, 0.1, 1.2, -0.2, -1.0, 0.0, -0.9, 0.3};
    int labels[4] = {1, 1, -1, -1};
    PldaModel *model = NULL;
    CHECK(plda_model_fit(x, labels, 4, 2, "diag", PLDA_CENTERING_GLOBAL, &model));
    double score = 0.0;
    int label = 0;
    double probe[2] = {2.0, 0.0};
    CHECK(plda_model_predict(model, probe, 2, &score, &label));
    if (label != 1 || !(score > 0.0)) {
        fprintf(stderr, "unexpected prediction %d %g\n", label, score);
        return 1;
    }

    if (plda_model_fit(x, labels, 4, 2, "bogus", PLDA_CENTERING_GLOBAL, &model) == PLDA_STATUS_OK) {
        return 1;
    }
    if (plda_last_error_message(NULL, 0) == 0) {
        return 1;
    }

    plda_model_free(model);
    plda_matrix_free(theta);
    plda_matrix_free(sigma);
    printf("ok\n");
    return 0;
}
