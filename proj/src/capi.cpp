#include "ouc.h"

#include <cmath>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "ouc/chaos.hpp"
#include "ouc/generator.hpp"
#include "ouc/hermite.hpp"
#include "ouc/hyper.hpp"
#include "ouc/json_io.hpp"
#include "ouc/measure.hpp"
#include "ouc/process.hpp"
#include "ouc/quadrature.hpp"
#include "ouc/rng.hpp"
#include "ouc/rotation.hpp"
#include "ouc/semigroup.hpp"

struct ouc_poly {
    ouc::Polynomial value;
};

struct ouc_expansion {
    ouc::ChaosExpansion value;
};

namespace {

template <typename Fn>
ouc_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument&) {
        return OUC_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        return OUC_ERR_INTERNAL;
    } catch (...) {
        return OUC_ERR_INTERNAL;
    }
}

ouc_status make_poly(ouc::Polynomial value, ouc_poly** out) {
    *out = new ouc_poly{std::move(value)};
    return OUC_OK;
}

std::vector<ouc::Complex> to_complex_vector(const double* interleaved, size_t len) {
    std::vector<ouc::Complex> v(len);
    for (size_t i = 0; i < len; ++i) v[i] = ouc::Complex(interleaved[2 * i], interleaved[2 * i + 1]);
    return v;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ouc::Integrator to_integrator(ouc_integrator_mode mode, int grid_size, long n_samples,
                              uint64_t seed) {
    switch (mode) {
        case OUC_INTEGRATOR_EXACT:
            return ouc::Integrator::exact_moment();
        case OUC_INTEGRATOR_QUADRATURE:
            return ouc::Integrator::quadrature(grid_size);
        case OUC_INTEGRATOR_MONTE_CARLO:
            return ouc::Integrator::monte_carlo(n_samples, seed);
    }
    throw std::invalid_argument("unknown integrator mode");
}

ouc::QVariant to_variant(ouc_q_variant variant) {
    switch (variant) {
        case OUC_Q_STATEMENT:
            return ouc::QVariant::Statement;
        case OUC_Q_PROOF:
            return ouc::QVariant::Proof;
    }
    throw std::invalid_argument("unknown q variant");
}

ouc_hyper_row to_row(const ouc::HyperReport& rep) {
    ouc_hyper_row row;
    row.p = rep.p;
    row.t = rep.t;
    row.theta = rep.theta;
    row.q = rep.q;
    row.lhs = rep.lhs;
    row.lhs_se = rep.lhs_se;
    row.rhs = rep.rhs;
    row.rhs_se = rep.rhs_se;
    row.margin = rep.margin;
    row.margin_se = rep.margin_se;
    row.variant = rep.variant == ouc::QVariant::Proof ? OUC_Q_PROOF : OUC_Q_STATEMENT;
    row.pass = rep.pass ? 1 : 0;
    return row;
}

}  // namespace

const char* ouc_status_message(ouc_status status) {
    switch (status) {
        case OUC_OK:
            return "ok";
        case OUC_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case OUC_ERR_DIMENSION_MISMATCH:
            return "operands have different n_vars";
        case OUC_ERR_PARSE:
            return "parse error";
        case OUC_ERR_NULL_POINTER:
            return "null pointer";
        case OUC_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char* ouc_version(void) { return "0.1.0"; }

void ouc_string_free(char* s) { delete[] s; }

void ouc_poly_free(ouc_poly* p) { delete p; }

ouc_status ouc_poly_clone(const ouc_poly* p, ouc_poly** out) {
    if (!p || !out) return OUC_ERR_NULL_POINTER;
    return guarded([&] { return make_poly(p->value, out); });
}

ouc_status ouc_poly_zero(int n_vars, ouc_poly** out) {
    if (!out) return OUC_ERR_NULL_POINTER;
    return guarded([&] { return make_poly(ouc::Polynomial(n_vars), out); });
}

ouc_status ouc_poly_constant(int n_vars, double re, double im, ouc_poly** out) {
    if (!out) return OUC_ERR_NULL_POINTER;
    return guarded(
        [&] { return make_poly(ouc::Polynomial::constant(n_vars, ouc::Complex(re, im)), out); });
}

ouc_status ouc_poly_variable(int n_vars, int j, int conjugated, ouc_poly** out) {
    if (!out) return OUC_ERR_NULL_POINTER;
    return guarded([&] {
        return make_poly(conjugated ? ouc::Polynomial::conj_variable(n_vars, j)
                                    : ouc::Polynomial::variable(n_vars, j),
                         out);
    });
}

ouc_status ouc_poly_hermite(int m, int n, ouc_poly** out) {
    if (!out) return OUC_ERR_NULL_POINTER;
    return guarded([&] { return make_poly(ouc::hermite_polynomial(m, n), out); });
}

ouc_status ouc_poly_hermite_product(int n_vars, const int* m, const int* n, size_t len,
                                    int normalized, ouc_poly** out) {
    if (!m || !n || !out) return OUC_ERR_NULL_POINTER;
    return guarded([&] {
        std::vector<int> mv(m, m + len), nv(n, n + len);
        return make_poly(ouc::hermite_product(mv, nv, n_vars, normalized != 0), out);
    });
}

ouc_status ouc_poly_random(int n_vars, int max_degree, int max_coeff, uint64_t seed,
                           ouc_poly** out) {
    if (!out) return OUC_ERR_NULL_POINTER;
    return guarded([&] {
        ouc::Rng rng(seed);
        return make_poly(ouc::random_gaussian_integer_polynomial(n_vars, max_degree, max_coeff, rng),
                         out);
    });
}

ouc_status ouc_poly_n_vars(const ouc_poly* p, int* out) {
    if (!p || !out) return OUC_ERR_NULL_POINTER;
    *out = p->value.n_vars();
    return OUC_OK;
}

ouc_status ouc_poly_degree(const ouc_poly* p, int* out) {
    if (!p || !out) return OUC_ERR_NULL_POINTER;
    *out = p->value.degree();
    return OUC_OK;
}

ouc_status ouc_poly_term_count(const ouc_poly* p, size_t* out) {
    if (!p || !out) return OUC_ERR_NULL_POINTER;
    *out = p->value.term_count();
    return OUC_OK;
}

ouc_status ouc_poly_max_abs_coefficient(const ouc_poly* p, double* out) {
    if (!p || !out) return OUC_ERR_NULL_POINTER;
    *out = p->value.max_abs_coefficient();
    return OUC_OK;
}

ouc_status ouc_poly_equal(const ouc_poly* p, const ouc_poly* q, int* out) {
    if (!p || !q || !out) return OUC_ERR_NULL_POINTER;
    *out = (p->value == q->value) ? 1 : 0;
    return OUC_OK;
}

ouc_status ouc_poly_add(const ouc_poly* p, const ouc_poly* q, ouc_poly** out) {
    if (!p || !q || !out) return OUC_ERR_NULL_POINTER;
    if (p->value.n_vars() != q->value.n_vars()) return OUC_ERR_DIMENSION_MISMATCH;
    return guarded([&] { return make_poly(p->value + q->value, out); });
}

ouc_status ouc_poly_sub(const ouc_poly* p, const ouc_poly* q, ouc_poly** out) {
    if (!p || !q || !out) return OUC_ERR_NULL_POINTER;
    if (p->value.n_vars() != q->value.n_vars()) return OUC_ERR_DIMENSION_MISMATCH;
    return guarded([&] { return make_poly(p->value - q->value, out); });
}

ouc_status ouc_poly_mul(const ouc_poly* p, const ouc_poly* q, ouc_poly** out) {
    if (!p || !q || !out) return OUC_ERR_NULL_POINTER;
    if (p->value.n_vars() != q->value.n_vars()) return OUC_ERR_DIMENSION_MISMATCH;
    return guarded([&] { return make_poly(p->value * q->value, out); });
}

ouc_status ouc_poly_scale(const ouc_poly* p, double re, double im, ouc_poly** out) {
    if (!p || !out) return OUC_ERR_NULL_POINTER;
    return guarded([&] { return make_poly(p->value.scaled(ouc::Complex(re, im)), out); });
}

ouc_status ouc_poly_conjugate(const ouc_poly* p, ouc_poly** out) {
    if (!p || !out) return OUC_ERR_NULL_POINTER;
    return guarded([&] { return make_poly(p->value.conjugate(), out); });
}

ouc_status ouc_poly_dz(const ouc_poly* p, int j, ouc_poly** out) {
    if (!p || !out) return OUC_ERR_NULL_POINTER;
    return guarded([&] { return make_poly(ouc::dz(p->value, j), out); });
}

ouc_status ouc_poly_dzbar(const ouc_poly* p, int j, ouc_poly** out) {
    if (!p || !out) return OUC_ERR_NULL_POINTER;
    return guarded([&] { return make_poly(ouc::dzbar(p->value, j), out); });
}

ouc_status ouc_poly_eval(const ouc_poly* p, const double* point, size_t point_len, double* out_re,
                         double* out_im) {
    if (!p || !point || !out_re || !out_im) return OUC_ERR_NULL_POINTER;
    if (static_cast<int>(point_len) != p->value.n_vars()) return OUC_ERR_DIMENSION_MISMATCH;
    return guarded([&] {
        const auto v = p->value.eval(to_complex_vector(point, point_len));
        *out_re = v.real();
        *out_im = v.imag();
        return OUC_OK;
    });
}

ouc_status ouc_poly_to_json(const ouc_poly* p, char** out) {
    if (!p || !out) return OUC_ERR_NULL_POINTER;
    return guarded([&] {
        *out = copy_string(ouc::polynomial_to_json(p->value));
        return OUC_OK;
    });
}

ouc_status ouc_poly_from_json(const char* text, ouc_poly** out) {
    if (!text || !out) return OUC_ERR_NULL_POINTER;
    try {
        return make_poly(ouc::polynomial_from_json(text), out);
    } catch (const std::invalid_argument&) {
        return OUC_ERR_PARSE;
    } catch (...) {
        return OUC_ERR_INTERNAL;
    }
}

ouc_status ouc_inner_product(const ouc_poly* p, const ouc_poly* q, double* out_re,
                             double* out_im) {
    if (!p || !q || !out_re || !out_im) return OUC_ERR_NULL_POINTER;
    if (p->value.n_vars() != q->value.n_vars()) return OUC_ERR_DIMENSION_MISMATCH;
    return guarded([&] {
        const ouc::GaussianMeasure mu{p->value.n_vars()};
        const auto v = mu.inner_product(p->value, q->value);
        *out_re = v.real();
        *out_im = v.imag();
        return OUC_OK;
    });
}

ouc_status ouc_quadrature_inner_product(const ouc_poly* p, const ouc_poly* q, int grid_size,
                                        double* out_re, double* out_im) {
    if (!p || !q || !out_re || !out_im) return OUC_ERR_NULL_POINTER;
    if (p->value.n_vars() != q->value.n_vars()) return OUC_ERR_DIMENSION_MISMATCH;
    return guarded([&] {
        const auto v = ouc::quadrature_inner_product(p->value, q->value, grid_size);
        *out_re = v.real();
        *out_im = v.imag();
        return OUC_OK;
    });
}

ouc_status ouc_gaussian_mean(const ouc_poly* p, double* out_re, double* out_im) {
    if (!p || !out_re || !out_im) return OUC_ERR_NULL_POINTER;
    return guarded([&] {
        const ouc::GaussianMeasure mu{p->value.n_vars()};
        const auto v = mu.mean(p->value);
        *out_re = v.real();
        *out_im = v.imag();
        return OUC_OK;
    });
}

ouc_status ouc_gaussian_points(int n_vars, size_t count, uint64_t seed, double* out_interleaved) {
    if (!out_interleaved) return OUC_ERR_NULL_POINTER;
    if (n_vars < 1) return OUC_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        ouc::Rng rng(seed);
        for (size_t i = 0; i < count * static_cast<size_t>(n_vars); ++i) {
            const auto z = rng.complex_gaussian();
            out_interleaved[2 * i] = z.real();
            out_interleaved[2 * i + 1] = z.imag();
        }
        return OUC_OK;
    });
}

ouc_status ouc_apply_generator(const ouc_poly* p, double theta, ouc_poly** out) {
    if (!p || !out) return OUC_ERR_NULL_POINTER;
    return guarded(
        [&] { return make_poly(ouc::apply_generator(p->value, ouc::RotationParams(theta)), out); });
}

ouc_status ouc_trace_second_derivative(const ouc_poly* p, double theta, ouc_poly** out) {
    if (!p || !out) return OUC_ERR_NULL_POINTER;
    return guarded([&] {
        return make_poly(ouc::trace_second_derivative(p->value, ouc::RotationParams(theta)), out);
    });
}

ouc_status ouc_generator_identity_residual(const ouc_poly* p, double theta, double* out) {
    if (!p || !out) return OUC_ERR_NULL_POINTER;
    return guarded([&] {
        *out = ouc::generator_identity_residual(p->value, ouc::RotationParams(theta))
                   .max_abs_coefficient();
        return OUC_OK;
    });
}

ouc_status ouc_eigen_residual(int m, int n, double theta, double* out) {
    if (!out) return OUC_ERR_NULL_POINTER;
    return guarded([&] {
        const ouc::RotationParams params(theta);
        const ouc::Polynomial basis =
            ouc::hermite_polynomial(m, n).scaled(
                ouc::Complex(1.0 / std::sqrt(ouc::hermite_squared_norm(m, n)), 0.0));
        const ouc::Complex eigenvalue((m + n) * params.cos_theta(), (m - n) * params.sin_theta());
        *out = (ouc::apply_generator(basis, params) + basis.scaled(eigenvalue)).max_abs_coefficient();
        return OUC_OK;
    });
}

ouc_status ouc_directional_check(const ouc_poly* p, const double* x, const double* h, size_t len,
                                 double theta, double dt, double analytic[2],
                                 double finite_difference[2]) {
    if (!p || !x || !h || !analytic || !finite_difference) return OUC_ERR_NULL_POINTER;
    if (static_cast<int>(len) != p->value.n_vars()) return OUC_ERR_DIMENSION_MISMATCH;
    return guarded([&] {
        const auto xs = to_complex_vector(x, len);
        const auto hs = to_complex_vector(h, len);
        const auto check = ouc::directional_check(p->value, xs, hs, ouc::RotationParams(theta), dt);
        analytic[0] = check.analytic.real();
        analytic[1] = check.analytic.imag();
        finite_difference[0] = check.finite_difference.real();
        finite_difference[1] = check.finite_difference.imag();
        return OUC_OK;
    });
}

void ouc_expansion_free(ouc_expansion* e) { delete e; }

ouc_status ouc_expand(const ouc_poly* p, ouc_expansion** out) {
    if (!p || !out) return OUC_ERR_NULL_POINTER;
    return guarded([&] {
        *out = new ouc_expansion{ouc::expand(p->value)};
        return OUC_OK;
    });
}

ouc_status ouc_expansion_size(const ouc_expansion* e, size_t* out) {
    if (!e || !out) return OUC_ERR_NULL_POINTER;
    *out = e->value.size();
    return OUC_OK;
}

ouc_status ouc_expansion_n_vars(const ouc_expansion* e, int* out) {
    if (!e || !out) return OUC_ERR_NULL_POINTER;
    *out = e->value.n_vars();
    return OUC_OK;
}

ouc_status ouc_expansion_parseval_sum(const ouc_expansion* e, double* out) {
    if (!e || !out) return OUC_ERR_NULL_POINTER;
    *out = e->value.parseval_sum();
    return OUC_OK;
}

ouc_status ouc_expansion_to_json(const ouc_expansion* e, char** out) {
    if (!e || !out) return OUC_ERR_NULL_POINTER;
    return guarded([&] {
        *out = copy_string(ouc::expansion_to_json(e->value));
        return OUC_OK;
    });
}

ouc_status ouc_reconstruct(const ouc_expansion* e, ouc_poly** out) {
    if (!e || !out) return OUC_ERR_NULL_POINTER;
    return guarded([&] { return make_poly(ouc::reconstruct(e->value), out); });
}

ouc_status ouc_project(const ouc_poly* p, int m, int n, ouc_poly** out) {
    if (!p || !out) return OUC_ERR_NULL_POINTER;
    return guarded([&] { return make_poly(ouc::project(p->value, m, n), out); });
}

ouc_status ouc_spectral_semigroup(const ouc_expansion* e, double t, double theta,
                                  ouc_expansion** out) {
    if (!e || !out) return OUC_ERR_NULL_POINTER;
    return guarded([&] {
        *out = new ouc_expansion{ouc::spectral_semigroup(e->value, t, ouc::RotationParams(theta))};
        return OUC_OK;
    });
}

ouc_status ouc_semigroup_polynomial(const ouc_poly* p, double t, double theta, ouc_poly** out) {
    if (!p || !out) return OUC_ERR_NULL_POINTER;
    return guarded(
        [&] { return make_poly(ouc::semigroup_polynomial(p->value, t, ouc::RotationParams(theta)), out); });
}

ouc_status ouc_semigroup_eval(const ouc_poly* p, const double* x, size_t x_len, double t,
                              double theta, ouc_integrator_mode mode, int grid_size,
                              long n_samples, uint64_t seed, double out_value[2],
                              double* out_se) {
    if (!p || !x || !out_value || !out_se) return OUC_ERR_NULL_POINTER;
    if (static_cast<int>(x_len) != p->value.n_vars()) return OUC_ERR_DIMENSION_MISMATCH;
    return guarded([&] {
        const auto xs = to_complex_vector(x, x_len);
        const auto value = ouc::mehler_apply(p->value, xs, t, ouc::RotationParams(theta),
                                             to_integrator(mode, grid_size, n_samples, seed));
        out_value[0] = value.value.real();
        out_value[1] = value.value.imag();
        *out_se = value.std_error;
        return OUC_OK;
    });
}

ouc_status ouc_semigroup_agreement(const ouc_poly* p, const double* x, size_t x_len, double t,
                                   double theta, double spectral[2], double mehler[2],
                                   double* residual) {
    if (!p || !x || !spectral || !mehler || !residual) return OUC_ERR_NULL_POINTER;
    if (static_cast<int>(x_len) != p->value.n_vars()) return OUC_ERR_DIMENSION_MISMATCH;
    return guarded([&] {
        const ouc::RotationParams params(theta);
        const auto xs = to_complex_vector(x, x_len);
        const auto spectral_value =
            ouc::reconstruct(ouc::spectral_semigroup(ouc::expand(p->value), t, params)).eval(xs);
        const auto mehler_value =
            ouc::mehler_apply(p->value, xs, t, params, ouc::Integrator::exact_moment()).value;
        spectral[0] = spectral_value.real();
        spectral[1] = spectral_value.imag();
        mehler[0] = mehler_value.real();
        mehler[1] = mehler_value.imag();
        *residual = std::abs(spectral_value - mehler_value) / (1.0 + std::abs(mehler_value));
        return OUC_OK;
    });
}

ouc_status ouc_chapman_kolmogorov_residual(const ouc_poly* p, const double* x, size_t x_len,
                                           double s, double t, double theta, double* out) {
    if (!p || !x || !out) return OUC_ERR_NULL_POINTER;
    if (static_cast<int>(x_len) != p->value.n_vars()) return OUC_ERR_DIMENSION_MISMATCH;
    return guarded([&] {
        const auto xs = to_complex_vector(x, x_len);
        *out = ouc::chapman_kolmogorov_residual(p->value, xs, s, t, ouc::RotationParams(theta));
        return OUC_OK;
    });
}

ouc_status ouc_invariance_residual(const ouc_poly* p, double t, double theta,
                                   ouc_integrator_mode mode, int grid_size, long n_samples,
                                   uint64_t seed, double* residual, double* std_error) {
    if (!p || !residual || !std_error) return OUC_ERR_NULL_POINTER;
    return guarded([&] {
        const auto result = ouc::invariance_check(p->value, t, ouc::RotationParams(theta),
                                                  to_integrator(mode, grid_size, n_samples, seed));
        *residual = result.residual;
        *std_error = result.std_error;
        return OUC_OK;
    });
}

ouc_status ouc_simulate_paths(double a, double theta, double sigma2, double z0_re, double z0_im,
                              double t_end, int n_steps, int n_paths, ouc_scheme scheme,
                              uint64_t seed, double* out) {
    if (!out) return OUC_ERR_NULL_POINTER;
    if (n_paths < 1) return OUC_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const ouc::SDEParams params{a, theta, sigma2};
        params.validate();
        ouc::PathConfig cfg;
        cfg.z0 = ouc::Complex(z0_re, z0_im);
        cfg.t_end = t_end;
        cfg.n_steps = n_steps;
        cfg.scheme = scheme == OUC_SCHEME_EULER ? ouc::PathConfig::Scheme::Euler
                                                : ouc::PathConfig::Scheme::Exact;
        cfg.validate();
        const ouc::Rng base(seed);
        size_t offset = 0;
        for (int k = 0; k < n_paths; ++k) {
            ouc::PathConfig local = cfg;
            local.seed = base.fork(static_cast<std::uint64_t>(k)).seed();
            const auto path = ouc::sample_path(local, params);
            for (const auto& z : path) {
                out[offset++] = z.real();
                out[offset++] = z.imag();
            }
        }
        return OUC_OK;
    });
}

ouc_status ouc_simulate_summary(double a, double theta, double sigma2, double z0_re, double z0_im,
                                double t_end, int n_steps, int n_paths, ouc_scheme scheme,
                                uint64_t seed, ouc_sim_summary* out) {
    if (!out) return OUC_ERR_NULL_POINTER;
    if (n_paths < 2) return OUC_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const ouc::SDEParams params{a, theta, sigma2};
        params.validate();
        ouc::PathConfig cfg;
        cfg.z0 = ouc::Complex(z0_re, z0_im);
        cfg.t_end = t_end;
        cfg.n_steps = n_steps;
        cfg.seed = seed;
        cfg.scheme = scheme == OUC_SCHEME_EULER ? ouc::PathConfig::Scheme::Euler
                                                : ouc::PathConfig::Scheme::Exact;
        cfg.validate();
        const auto batch = ouc::sample_terminal(cfg, params, n_paths);
        ouc::Complex mean(0.0, 0.0);
        double abs2_mean = 0.0;
        for (const auto& z : batch.values) {
            mean += z;
            abs2_mean += std::norm(z);
        }
        const double n = static_cast<double>(batch.values.size());
        mean /= n;
        abs2_mean /= n;
        double var_mean = 0.0, var_abs2 = 0.0;
        for (const auto& z : batch.values) {
            var_mean += std::norm(z - mean);
            const double d = std::norm(z) - abs2_mean;
            var_abs2 += d * d;
        }
        var_mean /= (n - 1.0);
        var_abs2 /= (n - 1.0);
        out->mean_re = mean.real();
        out->mean_im = mean.imag();
        out->mean_se = std::sqrt(var_mean / n);
        const ouc::Complex exact_mean = std::exp(-params.alpha() * t_end) * cfg.z0;
        out->exact_mean_re = exact_mean.real();
        out->exact_mean_im = exact_mean.imag();
        out->second_moment = abs2_mean;
        out->second_moment_se = std::sqrt(var_abs2 / n);
        out->stationary_second_moment = 2.0 * params.stationary_coordinate_variance();
        out->euler_stable = ouc::euler_is_stable(params, cfg.dt()) ? 1 : 0;
        return OUC_OK;
    });
}

ouc_status ouc_q_exponent(double p, double t, double theta, ouc_q_variant variant, double* out) {
    if (!out) return OUC_ERR_NULL_POINTER;
    return guarded([&] {
        *out = ouc::q_exponent(p, t, ouc::RotationParams(theta), to_variant(variant));
        return OUC_OK;
    });
}

ouc_status ouc_lp_norm(const ouc_poly* f, double p, ouc_integrator_mode mode, int grid_size,
                       long n_samples, uint64_t seed, double* value, double* std_error) {
    if (!f || !value || !std_error) return OUC_ERR_NULL_POINTER;
    return guarded([&] {
        ouc::LpEstimator est = mode == OUC_INTEGRATOR_QUADRATURE
                                   ? ouc::LpEstimator::quadrature(grid_size)
                                   : ouc::LpEstimator::monte_carlo(n_samples, seed);
        if (mode == OUC_INTEGRATOR_EXACT) {
            throw std::invalid_argument("lp_norm backends are quadrature or monte carlo");
        }
        const auto est_value = ouc::lp_norm(f->value, p, est);
        *value = est_value.value;
        *std_error = est_value.std_error;
        return OUC_OK;
    });
}

ouc_status ouc_hyper_check(const ouc_poly* f, double p, double t, double theta,
                           ouc_q_variant variant, long n_samples, uint64_t seed,
                           ouc_hyper_row* out) {
    if (!f || !out) return OUC_ERR_NULL_POINTER;
    return guarded([&] {
        *out = to_row(ouc::hyper_check(f->value, p, t, ouc::RotationParams(theta),
                                       to_variant(variant), n_samples, seed));
        return OUC_OK;
    });
}

ouc_status ouc_hyper_scan(int degree, int dim, const double* p_grid, size_t p_count,
                          const double* t_grid, size_t t_count, const double* theta_grid,
                          size_t theta_count, ouc_q_variant variant, int polys_per_cell,
                          long n_samples, uint64_t seed, ouc_hyper_row** rows,
                          size_t* row_count) {
    if (!p_grid || !t_grid || !theta_grid || !rows || !row_count) return OUC_ERR_NULL_POINTER;
    return guarded([&] {
        ouc::HyperScanConfig config;
        config.degree = degree;
        config.dim = dim;
        config.p_grid.assign(p_grid, p_grid + p_count);
        config.t_grid.assign(t_grid, t_grid + t_count);
        config.theta_grid.assign(theta_grid, theta_grid + theta_count);
        config.variant = to_variant(variant);
        config.polys_per_cell = polys_per_cell;
        config.n_samples = n_samples;
        config.seed = seed;
        const auto reports = ouc::hyper_scan(config);
        auto* buffer = new ouc_hyper_row[reports.size()];
        for (size_t i = 0; i < reports.size(); ++i) buffer[i] = to_row(reports[i]);
        *rows = buffer;
        *row_count = reports.size();
        return OUC_OK;
    });
}

void ouc_hyper_rows_free(ouc_hyper_row* rows) { delete[] rows; }
