/*
 * C interface to the complex Ornstein-Uhlenbeck calculus library.
 *
 * Conventions:
 *   - every function returns an ouc_status; results go through out-pointers;
 *   - objects are opaque handles released with the matching _free function;
 *   - complex scalars are (re, im) double pairs; arrays of complex numbers
 *     are interleaved re0, im0, re1, im1, ...;
 *   - coordinate indices are 1-based, matching z_1..z_n;
 *   - strings returned through char** are owned by the caller and released
 *     with ouc_string_free.
 */

#ifndef OUC_H
#define OUC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ouc_status {
    OUC_OK = 0,
    OUC_ERR_INVALID_ARGUMENT = 1,
    OUC_ERR_DIMENSION_MISMATCH = 2,
    OUC_ERR_PARSE = 3,
    OUC_ERR_NULL_POINTER = 4,
    OUC_ERR_INTERNAL = 5
} ouc_status;

const char* ouc_status_message(ouc_status status);
const char* ouc_version(void);
void ouc_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Polynomials in z_1..z_n and their conjugates                        */
/* ------------------------------------------------------------------ */

typedef struct ouc_poly ouc_poly;

void ouc_poly_free(ouc_poly* p);
ouc_status ouc_poly_clone(const ouc_poly* p, ouc_poly** out);

ouc_status ouc_poly_zero(int n_vars, ouc_poly** out);
ouc_status ouc_poly_constant(int n_vars, double re, double im, ouc_poly** out);
/* conjugated = 0 builds z_j, conjugated != 0 builds conj(z_j). */
ouc_status ouc_poly_variable(int n_vars, int j, int conjugated, ouc_poly** out);
/* Complex Hermite polynomial of bidegree (m, n), one variable. */
ouc_status ouc_poly_hermite(int m, int n, ouc_poly** out);
/* Product of per-coordinate Hermite factors; normalized != 0 gives unit norm. */
ouc_status ouc_poly_hermite_product(int n_vars, const int* m, const int* n, size_t len,
                                    int normalized, ouc_poly** out);
/* Seeded random polynomial with Gaussian-integer coefficients. */
ouc_status ouc_poly_random(int n_vars, int max_degree, int max_coeff, uint64_t seed,
                           ouc_poly** out);

ouc_status ouc_poly_n_vars(const ouc_poly* p, int* out);
ouc_status ouc_poly_degree(const ouc_poly* p, int* out);
ouc_status ouc_poly_term_count(const ouc_poly* p, size_t* out);
ouc_status ouc_poly_max_abs_coefficient(const ouc_poly* p, double* out);
ouc_status ouc_poly_equal(const ouc_poly* p, const ouc_poly* q, int* out);

ouc_status ouc_poly_add(const ouc_poly* p, const ouc_poly* q, ouc_poly** out);
ouc_status ouc_poly_sub(const ouc_poly* p, const ouc_poly* q, ouc_poly** out);
ouc_status ouc_poly_mul(const ouc_poly* p, const ouc_poly* q, ouc_poly** out);
ouc_status ouc_poly_scale(const ouc_poly* p, double re, double im, ouc_poly** out);
ouc_status ouc_poly_conjugate(const ouc_poly* p, ouc_poly** out);
ouc_status ouc_poly_dz(const ouc_poly* p, int j, ouc_poly** out);
ouc_status ouc_poly_dzbar(const ouc_poly* p, int j, ouc_poly** out);

/* point: interleaved complex array of length n_vars. */
ouc_status ouc_poly_eval(const ouc_poly* p, const double* point, size_t point_len,
                         double* out_re, double* out_im);

ouc_status ouc_poly_to_json(const ouc_poly* p, char** out);
ouc_status ouc_poly_from_json(const char* text, ouc_poly** out);

/* ------------------------------------------------------------------ */
/* Gaussian measure: exact moments and quadrature oracle               */
/* ------------------------------------------------------------------ */

/* Integral of p * conj(q) under the product standard complex Gaussian. */
ouc_status ouc_inner_product(const ouc_poly* p, const ouc_poly* q, double* out_re, double* out_im);
/* Same integral on a tensor Gauss-Hermite grid (grid_size nodes per axis). */
ouc_status ouc_quadrature_inner_product(const ouc_poly* p, const ouc_poly* q, int grid_size,
                                        double* out_re, double* out_im);
ouc_status ouc_gaussian_mean(const ouc_poly* p, double* out_re, double* out_im);
/* count points of the n_vars-dimensional standard complex Gaussian. */
ouc_status ouc_gaussian_points(int n_vars, size_t count, uint64_t seed, double* out_interleaved);

/* ------------------------------------------------------------------ */
/* Nonsymmetric Ornstein-Uhlenbeck generator                           */
/* ------------------------------------------------------------------ */

ouc_status ouc_apply_generator(const ouc_poly* p, double theta, ouc_poly** out);
ouc_status ouc_trace_second_derivative(const ouc_poly* p, double theta, ouc_poly** out);
/* Max |coefficient| of the identity residual; exactly 0 for exact inputs. */
ouc_status ouc_generator_identity_residual(const ouc_poly* p, double theta, double* out);
/* Max |coefficient| of L B + [(m+n)cos + i(m-n)sin] B for the normalized
 * one-variable Hermite basis element of bidegree (m, n). */
ouc_status ouc_eigen_residual(int m, int n, double theta, double* out);
/* Analytic rotated directional derivative next to a central difference. */
ouc_status ouc_directional_check(const ouc_poly* p, const double* x, const double* h,
                                 size_t len, double theta, double dt,
                                 double analytic[2], double finite_difference[2]);

/* ------------------------------------------------------------------ */
/* Chaos decomposition                                                 */
/* ------------------------------------------------------------------ */

typedef struct ouc_expansion ouc_expansion;

void ouc_expansion_free(ouc_expansion* e);
ouc_status ouc_expand(const ouc_poly* p, ouc_expansion** out);
ouc_status ouc_expansion_size(const ouc_expansion* e, size_t* out);
ouc_status ouc_expansion_n_vars(const ouc_expansion* e, int* out);
/* Sum of squared orthonormal-basis coefficients. */
ouc_status ouc_expansion_parseval_sum(const ouc_expansion* e, double* out);
ouc_status ouc_expansion_to_json(const ouc_expansion* e, char** out);
ouc_status ouc_reconstruct(const ouc_expansion* e, ouc_poly** out);
/* Chaos component of f with total bidegree (m, n). */
ouc_status ouc_project(const ouc_poly* p, int m, int n, ouc_poly** out);

/* ------------------------------------------------------------------ */
/* Semigroup: spectral multipliers and the averaging form              */
/* ------------------------------------------------------------------ */

typedef enum ouc_integrator_mode {
    OUC_INTEGRATOR_EXACT = 0,
    OUC_INTEGRATOR_QUADRATURE = 1,
    OUC_INTEGRATOR_MONTE_CARLO = 2
} ouc_integrator_mode;

ouc_status ouc_spectral_semigroup(const ouc_expansion* e, double t, double theta,
                                  ouc_expansion** out);
/* The polynomial x -> (T_t f)(x), noise integrated out exactly. */
ouc_status ouc_semigroup_polynomial(const ouc_poly* p, double t, double theta, ouc_poly** out);
/* (T_t f)(x) through the chosen backend; out_se is 0 for deterministic modes. */
ouc_status ouc_semigroup_eval(const ouc_poly* p, const double* x, size_t x_len, double t,
                              double theta, ouc_integrator_mode mode, int grid_size,
                              long n_samples, uint64_t seed, double out_value[2], double* out_se);
/* Spectral and exact averaging values at one point plus their scaled gap. */
ouc_status ouc_semigroup_agreement(const ouc_poly* p, const double* x, size_t x_len, double t,
                                   double theta, double spectral[2], double mehler[2],
                                   double* residual);
ouc_status ouc_chapman_kolmogorov_residual(const ouc_poly* p, const double* x, size_t x_len,
                                           double s, double t, double theta, double* out);
ouc_status ouc_invariance_residual(const ouc_poly* p, double t, double theta,
                                   ouc_integrator_mode mode, int grid_size, long n_samples,
                                   uint64_t seed, double* residual, double* std_error);

/* ------------------------------------------------------------------ */
/* Path simulation                                                     */
/* ------------------------------------------------------------------ */

typedef enum ouc_scheme { OUC_SCHEME_EXACT = 0, OUC_SCHEME_EULER = 1 } ouc_scheme;

/* Fills out with n_paths * (n_steps + 1) interleaved complex values, path
 * major; path k is step-for-step reproducible from (seed, k). */
ouc_status ouc_simulate_paths(double a, double theta, double sigma2, double z0_re, double z0_im,
                              double t_end, int n_steps, int n_paths, ouc_scheme scheme,
                              uint64_t seed, double* out);

typedef struct ouc_sim_summary {
    double mean_re, mean_im;          /* sample mean of the terminal value   */
    double mean_se;                   /* standard error of that mean         */
    double exact_mean_re, exact_mean_im; /* e^{-alpha t} z0                  */
    double second_moment;             /* sample mean of |z|^2                */
    double second_moment_se;
    double stationary_second_moment;  /* 2 sigma2 / r                        */
    int euler_stable;                 /* |1 - alpha dt| < 1                  */
} ouc_sim_summary;

ouc_status ouc_simulate_summary(double a, double theta, double sigma2, double z0_re,
                                double z0_im, double t_end, int n_steps, int n_paths,
                                ouc_scheme scheme, uint64_t seed, ouc_sim_summary* out);

/* ------------------------------------------------------------------ */
/* Hypercontractivity                                                  */
/* ------------------------------------------------------------------ */

typedef enum ouc_q_variant { OUC_Q_STATEMENT = 0, OUC_Q_PROOF = 1 } ouc_q_variant;

ouc_status ouc_q_exponent(double p, double t, double theta, ouc_q_variant variant, double* out);
/* mode OUC_INTEGRATOR_QUADRATURE needs even integer p; MONTE_CARLO any p >= 1. */
ouc_status ouc_lp_norm(const ouc_poly* f, double p, ouc_integrator_mode mode, int grid_size,
                       long n_samples, uint64_t seed, double* value, double* std_error);

typedef struct ouc_hyper_row {
    double p, t, theta, q;
    double lhs, lhs_se, rhs, rhs_se;
    double margin, margin_se;
    int variant;                      /* ouc_q_variant */
    int pass;                         /* margin >= -4 margin_se */
} ouc_hyper_row;

ouc_status ouc_hyper_check(const ouc_poly* f, double p, double t, double theta,
                           ouc_q_variant variant, long n_samples, uint64_t seed,
                           ouc_hyper_row* out);
/* Grid scan with polys_per_cell random polynomials per cell; writes the worst
 * row per (p, t, theta) cell. rows/row_count released with ouc_hyper_rows_free. */
ouc_status ouc_hyper_scan(int degree, int dim, const double* p_grid, size_t p_count,
                          const double* t_grid, size_t t_count, const double* theta_grid,
                          size_t theta_count, ouc_q_variant variant, int polys_per_cell,
                          long n_samples, uint64_t seed, ouc_hyper_row** rows,
                          size_t* row_count);
void ouc_hyper_rows_free(ouc_hyper_row* rows);

#ifdef __cplusplus
}
#endif

#endif /* OUC_H */
