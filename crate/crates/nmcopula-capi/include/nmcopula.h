#ifndef NMCOPULA_H
#define NMCOPULA_H

/* Generated by cbindgen from nmcopula-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every C-ABI call.
 */
typedef enum NmcStatus {
  NMC_STATUS_OK = 0,
  NMC_STATUS_NULL_POINTER = 1,
  NMC_STATUS_INVALID_PARAMETER = 2,
  NMC_STATUS_DIMENSION_MISMATCH = 3,
  NMC_STATUS_NO_DENSITY = 4,
  NMC_STATUS_CONVERGENCE_FAILURE = 5,
  NMC_STATUS_NON_FINITE_INPUT = 6,
  NMC_STATUS_FIT_FAILURE = 7,
  NMC_STATUS_BUFFER_TOO_SMALL = 8,
} NmcStatus;

/**
 * Family selector for the C constructors.
 */
typedef enum NmcFamily {
  NMC_FAMILY_NORMAL_MODE = 0,
  NMC_FAMILY_PRODUCT = 1,
  NMC_FAMILY_FRECHET_LOWER = 2,
  NMC_FAMILY_FRECHET_UPPER = 3,
  NMC_FAMILY_AMH = 4,
  NMC_FAMILY_CLAYTON = 5,
  NMC_FAMILY_FRANK = 6,
  NMC_FAMILY_FGM = 7,
  NMC_FAMILY_GAUSSIAN = 8,
} NmcFamily;

/**
 * Opaque copula model handle.
 */
typedef struct NmcModel NmcModel;

/**
 * The six association measures.
 */
typedef struct NmcMeasures {
  double sigma;
  double rho;
  double tau;
  double beta;
  double gamma;
  double footrule;
} NmcMeasures;

/**
 * Estimation result for one family on one dataset.
 */
typedef struct NmcFitResult {
  double theta_hat;
  double loglik;
  double cvmc;
  double aic;
  double cic;
  double neg2n_cic;
  uint64_t n;
  /**
   * 1 when the estimate sits on a search boundary.
   */
  uint8_t boundary;
  /**
   * 1 when the pseudolog-likelihood was flat in the parameter.
   */
  uint8_t flat_likelihood;
} NmcFitResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version string of the library; static storage, do not free.
 */
const char *nmc_version(void);

/**
 * Human-readable name of a status code; static storage, do not free.
 */
const char *nmc_status_name(enum NmcStatus status);

/**
 * Creates a normal mode copula from an amplitude and `dim` mode numbers.
 *
 * # Safety
 * `kappa` must point to `dim` readable u32 values and `out` must be a valid
 * writable location.
 */
enum NmcStatus nmc_model_new_normal_mode(double theta,
                                         const uint32_t *kappa,
                                         uintptr_t dim,
                                         struct NmcModel **out);

/**
 * Creates one of the bivariate one-parameter families
 * (amh, clayton, frank, fgm, gaussian).
 *
 * # Safety
 * `out` must be a valid writable location.
 */
enum NmcStatus nmc_model_new_classical(enum NmcFamily family, double theta, struct NmcModel **out);

/**
 * Creates a parameter-free reference copula: the product copula of the
 * given dimension, or a (bivariate) Fréchet bound.
 *
 * # Safety
 * `out` must be a valid writable location.
 */
enum NmcStatus nmc_model_new_reference(enum NmcFamily family, uintptr_t dim, struct NmcModel **out);

/**
 * Releases a model handle; a null pointer is ignored.
 *
 * # Safety
 * `model` must have been returned by one of the constructors and not freed
 * before.
 */
void nmc_model_free(struct NmcModel *model);

/**
 * Dimension of the model (0 for a null handle).
 *
 * # Safety
 * `model` must be a live handle or null.
 */
uintptr_t nmc_model_dim(const struct NmcModel *model);

/**
 * Boundary-extended CDF at `coords` (entries in [0, 1]).
 *
 * # Safety
 * `model` must be a live handle; `coords` must hold `dim` readable doubles;
 * `out` must be writable.
 */
enum NmcStatus nmc_cdf(const struct NmcModel *model,
                       const double *coords,
                       uintptr_t dim,
                       double *out);

/**
 * Copula density at an interior point.
 *
 * # Safety
 * As for `nmc_cdf`.
 */
enum NmcStatus nmc_density(const struct NmcModel *model,
                           const double *coords,
                           uintptr_t dim,
                           double *out);

/**
 * Conditional CDF of coordinate `target` given the other one (bivariate).
 *
 * # Safety
 * As for `nmc_cdf`.
 */
enum NmcStatus nmc_conditional_cdf(const struct NmcModel *model,
                                   uintptr_t target,
                                   const double *coords,
                                   uintptr_t dim,
                                   double *out);

/**
 * Inverse of the conditional CDF in the target coordinate.
 *
 * # Safety
 * `model` must be a live handle and `out` writable.
 */
enum NmcStatus nmc_conditional_quantile(const struct NmcModel *model,
                                        uintptr_t target,
                                        double u_given,
                                        double prob,
                                        double *out);

/**
 * Draws `n` points into `out` (row-major, `n * dim` doubles), deterministic
 * per seed.
 *
 * # Safety
 * `model` must be a live handle; `out` must have room for `out_len` doubles.
 */
enum NmcStatus nmc_sample(const struct NmcModel *model,
                          uintptr_t n,
                          uint64_t seed,
                          double *out,
                          uintptr_t out_len);

/**
 * Closed-form association measures (normal mode family only).
 *
 * # Safety
 * `model` must be a live handle and `out` writable.
 */
enum NmcStatus nmc_measures_closed_form(const struct NmcModel *model, struct NmcMeasures *out);

/**
 * Association measures by quadrature with `nodes` points per axis
 * (pass 0 for the default of 256).
 *
 * # Safety
 * `model` must be a live handle and `out` writable.
 */
enum NmcStatus nmc_measures_numeric(const struct NmcModel *model,
                                    uintptr_t nodes,
                                    struct NmcMeasures *out);

/**
 * Full estimation pipeline on raw data: ranks the rows into
 * pseudo-observations, maximizes the pseudolikelihood, and evaluates the
 * goodness-of-fit and information criteria.
 *
 * `data` holds `n` rows of two doubles (row-major). `kappa1`/`kappa2` are
 * only read for the normal mode family.
 *
 * # Safety
 * `data` must hold `2 * n` readable doubles and `out` must be writable.
 */
enum NmcStatus nmc_fit_mple(enum NmcFamily family,
                            uint32_t kappa1,
                            uint32_t kappa2,
                            const double *data,
                            uintptr_t n,
                            struct NmcFitResult *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NMCOPULA_H */
