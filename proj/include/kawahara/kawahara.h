/*
 * C interface to the Kawahara stability library.
 *
 * Every function returns a kw_status. On failure a message is available from
 * kw_last_error() (thread-local, valid until the next failing call on the same
 * thread). Output arrays follow one convention: pass out = NULL to query the
 * required length in *written (status KW_OK); a non-NULL buffer that is too small
 * returns KW_ERR_BUFFER_TOO_SMALL with the required length in *written.
 *
 * All parameters are in the normalized frame c u + u_xx + beta u_4x + sigma u^2 = 0
 * on a 2*pi period; kw_normalize maps the general form onto it.
 */
#ifndef KAWAHARA_KAWAHARA_H
#define KAWAHARA_KAWAHARA_H

#include <stddef.h>

#if defined(KAWAHARA_BUILDING_LIBRARY)
#define KW_API __attribute__((visibility("default")))
#else
#define KW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kw_status {
  KW_OK = 0,
  KW_ERR_INVALID_ARGUMENT = 1,
  KW_ERR_RESONANT = 2,
  KW_ERR_INADMISSIBLE = 3,
  KW_ERR_DEGENERATE = 4,
  KW_ERR_NUMERICAL = 5,
  KW_ERR_BUFFER_TOO_SMALL = 6,
  KW_ERR_INTERNAL = 7
} kw_status;

KW_API const char* kw_last_error(void);
/* N from the last KW_ERR_RESONANT on this thread, 0 otherwise. */
KW_API int kw_last_resonant_mode(void);
KW_API const char* kw_version(void);
KW_API const char* kw_status_name(kw_status status);

/* ---- dispersion ---------------------------------------------------------- */

typedef struct kw_params {
  double beta;
  double sigma;
} kw_params;

typedef struct kw_raw_params {
  double alpha;
  double beta;
  double sigma;
  double period;
} kw_raw_params;

/* Validates beta, sigma (nonzero, finite, nonresonant). */
KW_API kw_status kw_check_params(kw_params params);
KW_API kw_status kw_normalize(const kw_raw_params* raw, kw_params* out);
KW_API kw_status kw_normalize_speed(const kw_raw_params* raw, double c, double* out);
/* N > 1 with beta = 1/(1+N^2) within tolerance, or 0. */
KW_API int kw_is_resonant(double beta);
KW_API double kw_omega(double k, double beta);
KW_API double kw_group_velocity(double k, double beta);

/* ---- Stokes wave --------------------------------------------------------- */

typedef struct kw_stokes_coeffs {
  double c0;
  double c2;
  double u2_0; /* exponential-basis Fourier coefficients */
  double u2_2;
  double u3_3;
} kw_stokes_coeffs;

KW_API kw_status kw_stokes(kw_params params, kw_stokes_coeffs* out);
/* u_S(x_i) for count points. */
KW_API kw_status kw_stokes_eval(kw_params params, double eps, const double* x, double* u, size_t count);
/* Max residual of the steady equation over `grid_points` equispaced points. */
KW_API kw_status kw_stokes_residual(kw_params params, double eps, size_t grid_points, double* out);

/* ---- collisions ---------------------------------------------------------- */

typedef struct kw_interval {
  double lo;
  double hi;
} kw_interval;

typedef struct kw_collision {
  int delta_n;
  int n;
  int m;
  double mu0;
  double lambda0_im;
  double k_n;
  double k_m;
} kw_collision;

KW_API kw_status kw_admissible_beta_range(int delta_n, kw_interval* out);
KW_API kw_status kw_find_collision(kw_params params, int delta_n, kw_collision* out);
/* {a4, a3, a2, a1, a0}. */
KW_API kw_status kw_collision_polynomial(kw_params params, int delta_n, double coeffs[5]);
KW_API kw_status kw_quartic_discriminant(kw_params params, int delta_n, double* out);

/* ---- leading-order isolas ------------------------------------------------ */

typedef struct kw_curve_point {
  double mu;
  double lambda_re;
  double lambda_im;
  int branch; /* +1, -1, or 0 on the imaginary axis */
} kw_curve_point;

typedef struct kw_isola_model {
  int delta_n;
  int order;
  double eps;
  double mu_lo;
  double mu_hi;
  double mu_star;
  double lambda_star_re;
  double lambda_star_im;
  double center_im;
  double center_drift;
  double semi_major_a;
  double semi_minor_b;
  double strength;
  double im_tilt;
} kw_isola_model;

KW_API kw_status kw_isola_model_build(kw_params params, const kw_collision* site, double eps, kw_isola_model* out);
/* `samples` interior points per branch. */
KW_API kw_status kw_isola_curve(const kw_isola_model* model, size_t samples, kw_curve_point* out, size_t capacity,
                                size_t* written);
/* |re^2/a^2 + (im - center)^2/b^2 - 1|; NaN for a degenerate model. */
KW_API kw_status kw_ellipse_residual(const kw_isola_model* model, double lambda_re, double lambda_im, double* out);
KW_API kw_status kw_m1(kw_params params, const kw_collision* site, double* out);
/* First-order eigenvalue correction (delta_n = 1). */
KW_API kw_status kw_lambda1(kw_params params, const kw_collision* site, double mu1, int branch, double* re,
                            double* im);
/* S2 by the Fourier route and the closed form; fails if they disagree. */
KW_API kw_status kw_s2(kw_params params, const kw_collision* site, double* fourier, double* closed);
KW_API kw_status kw_s3(kw_params params, const kw_collision* site, double* out);
KW_API kw_status kw_center_drift(kw_params params, const kw_collision* site, double* out);

/* ---- second order (delta_n = 1) ------------------------------------------ */

typedef struct kw_second_order {
  double eps;
  double mu2;
  int regular; /* 0 when mu2 was overridden */
  double mu_lo;
  double mu_hi;
  double mu_star_shift; /* mu2 + mu_{*,1,1} */
  double mu_star;
  double lambda_star_re;
  double lambda_star_im;
} kw_second_order;

/* mu2_override may be NULL. */
KW_API kw_status kw_second_order_build(kw_params params, const kw_collision* site, double eps,
                                       const double* mu2_override, kw_second_order* out);
KW_API kw_status kw_second_order_curve(kw_params params, const kw_collision* site, double eps, size_t samples,
                                       const double* mu2_override, kw_curve_point* out, size_t capacity,
                                       size_t* written);
KW_API kw_status kw_lambda2(kw_params params, const kw_collision* site, double mu1, double mu2, int branch, double* re,
                            double* im);
KW_API kw_status kw_regular_curve_mu2(kw_params params, const kw_collision* site, double* out);
KW_API kw_status kw_critical_point_quartic(kw_params params, const kw_collision* site, double eps, double coeffs[5]);

/* ---- Floquet-Fourier-Hill spectra ---------------------------------------- */

typedef struct kw_spectrum kw_spectrum;
typedef struct kw_isola kw_isola;

/* Row-major (2 modes + 1)^2 complex matrix as interleaved re, im pairs. */
KW_API kw_status kw_hill_matrix(kw_params params, double eps, int modes, double mu, double* out, size_t capacity,
                                size_t* written);
/* threads = 0 uses the hardware concurrency. */
KW_API kw_status kw_sweep(kw_params params, double eps, int modes, const double* mu, size_t count, unsigned threads,
                          kw_spectrum** out);
KW_API void kw_spectrum_destroy(kw_spectrum* spectrum);
KW_API size_t kw_spectrum_slice_count(const kw_spectrum* spectrum);
/* Eigenvalues of one slice sorted by (imag, real). */
KW_API kw_status kw_spectrum_slice(const kw_spectrum* spectrum, size_t index, double* mu, double* re, double* im,
                                   size_t capacity, size_t* written);

typedef struct kw_extract_options {
  double growth_floor;
  double isola_radius;
  double mu_tol;
  int refine_peak;
} kw_extract_options;

typedef struct kw_isola_numerics {
  int empty;
  double mu_lo;
  double mu_hi;
  double mu_star;
  double lambda_star_re;
  double lambda_star_im;
  int lo_clipped;
  int hi_clipped;
  size_t point_count;
} kw_isola_numerics;

/* Defaults: floor 1e-10, mu_tol 1e-10, refine_peak 1, isola_radius 0 (must be set). */
KW_API void kw_extract_options_default(kw_extract_options* out);
KW_API double kw_default_isola_radius(const kw_isola_model* model);
KW_API kw_status kw_extract_isola(const kw_spectrum* spectrum, const kw_collision* site,
                                  const kw_extract_options* options, kw_isola** out);
KW_API void kw_isola_destroy(kw_isola* isola);
KW_API kw_status kw_isola_summary(const kw_isola* isola, kw_isola_numerics* out);
KW_API kw_status kw_isola_points(const kw_isola* isola, kw_curve_point* out, size_t capacity, size_t* written);

#ifdef __cplusplus
}
#endif

#endif
