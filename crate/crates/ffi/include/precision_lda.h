#ifndef PRECISION_LDA_H
#define PRECISION_LDA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum PldaStatus {
  PLDA_STATUS_OK = 0,
  PLDA_STATUS_NULL_POINTER = 1,
  PLDA_STATUS_INVALID_ARGUMENT = 2,
  PLDA_STATUS_DIMENSION_MISMATCH = 3,
  PLDA_STATUS_NOT_POSITIVE_DEFINITE = 4,
  PLDA_STATUS_NOT_CONVERGED = 5,
  PLDA_STATUS_NUMERICAL = 6,
  PLDA_STATUS_IO = 7,
  PLDA_STATUS_PARSE = 8,
  PLDA_STATUS_BUFFER_TOO_SMALL = 9,
  PLDA_STATUS_PANIC = 10,
} PldaStatus;

// Covariance centering used when fitting.
typedef enum PldaCentering {
  PLDA_CENTERING_GLOBAL = 0,
  PLDA_CENTERING_POOLED_CLASS = 1,
} PldaCentering;

// Symmetric matrix handle.
typedef struct PldaMatrix PldaMatrix;

// Fitted discriminant handle.
typedef struct PldaModel PldaModel;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copies the calling thread's last error message, NUL-terminated and
// truncated to fit, into `buf`. Returns the full message length in bytes
// excluding the terminator; an empty message means the last call succeeded.
//
// # Safety
// `buf` must be null or valid for `len` writes.
size_t plda_last_error_message(char *buf, size_t len);

// Builds a `dim × dim` matrix from row-major `data`; the input is
// symmetrized as `(A + Aᵀ)/2`.
//
// # Safety
// `data` must hold `dim * dim` doubles; `out` must be valid for one write.
enum PldaStatus plda_matrix_new(const double *data, size_t dim, struct PldaMatrix **out);

// Dimension of `matrix`, or 0 for a null handle.
//
// # Safety
// `matrix` must be null or a live handle.
size_t plda_matrix_dim(const struct PldaMatrix *matrix);

// Copies the row-major entries into `out`, which must hold `dim * dim`
// doubles (`len` is checked).
//
// # Safety
// `matrix` must be a live handle; `out` valid for `len` writes.
enum PldaStatus plda_matrix_copy(const struct PldaMatrix *matrix, double *out, size_t len);

// # Safety
// `matrix` must be null or a handle not yet freed.
void plda_matrix_free(struct PldaMatrix *matrix);

// Graphical lasso of the covariance `sigma` with penalty `lambda` on the
// off-diagonal entries (and on the diagonal when `penalize_diagonal` is
// non-zero). Non-convergence is reported as `NotConverged`.
//
// # Safety
// `sigma` must be a live handle; `out` valid for one write; `iters` null or
// valid for one write.
enum PldaStatus plda_glasso(const struct PldaMatrix *sigma,
                            double lambda,
                            int32_t penalize_diagonal,
                            struct PldaMatrix **out,
                            size_t *iters);

// `2Θ − ΘΣΘ`.
//
// # Safety
// `theta` and `sigma` must be live handles; `out` valid for one write.
enum PldaStatus plda_desparsify(const struct PldaMatrix *theta,
                                const struct PldaMatrix *sigma,
                                struct PldaMatrix **out);

// Fits a discriminant on `m` samples of dimension `p` (row-major `x`) with
// labels in {-1, +1}. `estimator` uses the command-line syntax: `mle`, `lda`,
// `diag`, `shrinkage:0.5`, `crda:10`, `e2d2:10`.
//
// # Safety
// `x` must hold `m * p` doubles, `labels` `m` ints, `estimator` a
// NUL-terminated string; `out` valid for one write.
enum PldaStatus plda_model_fit(const double *x,
                               const int32_t *labels,
                               size_t m,
                               size_t p,
                               const char *estimator,
                               enum PldaCentering centering,
                               struct PldaModel **out);

// Loads a model saved by the command line tool or [`plda_model_save`].
//
// # Safety
// `path` must be a NUL-terminated string; `out` valid for one write.
enum PldaStatus plda_model_load(const char *path, struct PldaModel **out);

// # Safety
// `model` must be a live handle and `path` a NUL-terminated string.
enum PldaStatus plda_model_save(const struct PldaModel *model, const char *path);

// Feature dimension of `model`, or 0 for a null handle.
//
// # Safety
// `model` must be null or a live handle.
size_t plda_model_dim(const struct PldaModel *model);

// Discriminant score of one sample and its label (+1 when the score is
// non-negative, -1 otherwise). Either output may be null.
//
// # Safety
// `model` must be a live handle, `x` hold `p` doubles; outputs null or valid
// for one write.
enum PldaStatus plda_model_predict(const struct PldaModel *model,
                                   const double *x,
                                   size_t p,
                                   double *score_out,
                                   int32_t *label_out);

// Expected misclassification rate of `model` when the classes are
// `N(mu_plus, sigma)` and `N(mu_minus, sigma)` with prior `prior_plus`.
//
// # Safety
// `model` and `sigma` must be live handles, the means hold `dim` doubles,
// `out` valid for one write.
enum PldaStatus plda_expected_error(const struct PldaModel *model,
                                    const double *mu_plus,
                                    const double *mu_minus,
                                    const struct PldaMatrix *sigma,
                                    double prior_plus,
                                    double *out);

// # Safety
// `model` must be null or a handle not yet freed.
void plda_model_free(struct PldaModel *model);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PRECISION_LDA_H */
