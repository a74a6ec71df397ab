#include "ouc/semigroup.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ouc/measure.hpp"
#include "ouc/quadrature.hpp"
#include "ouc/rng.hpp"

namespace ouc {

namespace {

void require_time(double t) {
    if (t < 0.0 || std::isnan(t)) throw std::invalid_argument("time must be nonnegative");
}

double binomial(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

// One-coordinate factor of the integrated substitution: for exponents (a, b),
//   sum_k C(a,k) C(b,k) 2^k k! s^(a-k) conj(s)^(b-k) c2^k x^(a-k) xbar^(b-k),
// where s is the contraction factor and c2 the squared noise scale.
Polynomial coordinate_factor(int n_vars, int j, int a, int b, Complex s, double c2) {
    Polynomial out(n_vars);
    std::vector<Complex> pow_s(a + 1, Complex(1.0, 0.0));
    std::vector<Complex> pow_sbar(b + 1, Complex(1.0, 0.0));
    for (int k = 1; k <= a; ++k) pow_s[k] = pow_s[k - 1] * s;
    for (int k = 1; k <= b; ++k) pow_sbar[k] = pow_sbar[k - 1] * std::conj(s);
    double noise_moment = 1.0;  // 2^k k! c2^k
    for (int k = 0; k <= std::min(a, b); ++k) {
        if (k > 0) noise_moment *= 2.0 * k * c2;
        if (noise_moment == 0.0 && k > 0) break;
        Monomial key{std::vector<int>(n_vars, 0), std::vector<int>(n_vars, 0)};
        key.a[j] = a - k;
        key.b[j] = b - k;
        const Complex coeff = binomial(a, k) * binomial(b, k) * noise_moment *
                              pow_s[a - k] * pow_sbar[b - k];
        out.add_to_coefficient(key, coeff);
    }
    return out;
}

}  // namespace

Complex semigroup_multiplier(int total_m, int total_n, double t, const RotationParams& params) {
    require_time(t);
    const double re = -(static_cast<double>(total_m) + total_n) * params.cos_theta() * t;
    const double im = -(static_cast<double>(total_m) - total_n) * params.sin_theta() * t;
    return std::exp(Complex(re, im));
}

ChaosExpansion spectral_semigroup(const ChaosExpansion& e, double t, const RotationParams& params) {
    require_time(t);
    ChaosExpansion out(e.n_vars());
    for (const auto& [idx, u] : e.raw_terms()) {
        out.set_raw_coefficient(idx, u * semigroup_multiplier(idx.total_m(), idx.total_n(), t, params));
    }
    return out;
}

Polynomial semigroup_polynomial(const Polynomial& f, double t, const RotationParams& params) {
    require_time(t);
    const Complex s = std::exp(-params.alpha() * t);
    const double c2 = 1.0 - std::exp(-2.0 * params.r() * t);
    Polynomial out(f.n_vars());
    for (const auto& [key, c] : f.terms()) {
        Polynomial term = Polynomial::constant(f.n_vars(), c);
        for (int j = 0; j < f.n_vars(); ++j) {
            if (key.a[j] == 0 && key.b[j] == 0) continue;
            term = term * coordinate_factor(f.n_vars(), j, key.a[j], key.b[j], s, c2);
        }
        out += term;
    }
    return out;
}

MehlerValue mehler_apply(const Polynomial& f, std::span<const Complex> x, double t,
                         const RotationParams& params, const Integrator& integrator) {
    require_time(t);
    if (static_cast<int>(x.size()) != f.n_vars()) {
        throw std::invalid_argument("point length does not match n_vars");
    }
    switch (integrator.mode) {
        case Integrator::Mode::ExactMoment:
            return {semigroup_polynomial(f, t, params).eval(x), 0.0};
        case Integrator::Mode::Quadrature: {
            if (integrator.grid_size < 1) throw std::invalid_argument("empty quadrature grid");
            // Substitute the numeric shift, leaving a polynomial in the noise
            // variables, then integrate that polynomial on the tensor grid.
            const Complex s = std::exp(-params.alpha() * t);
            const double c = std::sqrt(1.0 - std::exp(-2.0 * params.r() * t));
            Polynomial in_noise(f.n_vars());
            for (const auto& [key, coeff] : f.terms()) {
                Polynomial term = Polynomial::constant(f.n_vars(), coeff);
                for (int j = 0; j < f.n_vars(); ++j) {
                    const Polynomial shifted =
                        Polynomial::variable(f.n_vars(), j + 1).scaled(Complex(c, 0.0)) +
                        Polynomial::constant(f.n_vars(), s * x[j]);
                    const Polynomial shifted_bar =
                        Polynomial::conj_variable(f.n_vars(), j + 1).scaled(Complex(c, 0.0)) +
                        Polynomial::constant(f.n_vars(), std::conj(s * x[j]));
                    term = term * poly_pow(shifted, key.a[j]) * poly_pow(shifted_bar, key.b[j]);
                }
                in_noise += term;
            }
            return {quadrature_mean(in_noise, integrator.grid_size), 0.0};
        }
        case Integrator::Mode::MonteCarlo: {
            if (integrator.n_samples < 1) throw std::invalid_argument("Monte Carlo needs n_samples >= 1");
            const Complex s = std::exp(-params.alpha() * t);
            const double c = std::sqrt(1.0 - std::exp(-2.0 * params.r() * t));
            Rng rng(integrator.seed);
            std::vector<Complex> point(f.n_vars());
            Complex mean(0.0, 0.0);
            double m2 = 0.0;  // accumulated squared deviation, re + im
            for (long k = 0; k < integrator.n_samples; ++k) {
                for (int j = 0; j < f.n_vars(); ++j) {
                    point[j] = s * x[j] + c * rng.complex_gaussian();
                }
                const Complex v = f.eval(point);
                const Complex delta = v - mean;
                mean += delta / static_cast<double>(k + 1);
                m2 += delta.real() * (v - mean).real() + delta.imag() * (v - mean).imag();
            }
            const double n = static_cast<double>(integrator.n_samples);
            const double se = n > 1 ? std::sqrt(m2 / (n - 1) / n) : 0.0;
            return {mean, se};
        }
    }
    throw std::logic_error("unreachable integrator mode");
}

double chapman_kolmogorov_residual(const Polynomial& f, std::span<const Complex> x,
                                   double s, double t, const RotationParams& params) {
    require_time(s);
    require_time(t);
    const Polynomial two_step = semigroup_polynomial(semigroup_polynomial(f, t, params), s, params);
    const Polynomial one_step = semigroup_polynomial(f, s + t, params);
    const Complex lhs = two_step.eval(x);
    const Complex rhs = one_step.eval(x);
    return std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
}

InvarianceResult invariance_check(const Polynomial& f, double t, const RotationParams& params,
                                  const Integrator& integrator) {
    require_time(t);
    const GaussianMeasure mu{f.n_vars()};
    const Complex direct = mu.mean(f);
    switch (integrator.mode) {
        case Integrator::Mode::ExactMoment: {
            const Complex semi = mu.mean(semigroup_polynomial(f, t, params));
            return {semi, direct, std::abs(semi - direct) / (1.0 + std::abs(direct)), 0.0};
        }
        case Integrator::Mode::Quadrature: {
            if (integrator.grid_size < 1) throw std::invalid_argument("empty quadrature grid");
            const Complex semi = quadrature_mean(semigroup_polynomial(f, t, params), integrator.grid_size);
            return {semi, direct, std::abs(semi - direct) / (1.0 + std::abs(direct)), 0.0};
        }
        case Integrator::Mode::MonteCarlo: {
            if (integrator.n_samples < 1) throw std::invalid_argument("Monte Carlo needs n_samples >= 1");
            const Polynomial tf = semigroup_polynomial(f, t, params);
            Rng rng(integrator.seed);
            Complex mean(0.0, 0.0);
            double m2 = 0.0;
            for (long k = 0; k < integrator.n_samples; ++k) {
                const auto point = gaussian_vector(f.n_vars(), rng);
                const Complex v = tf.eval(point);
                const Complex delta = v - mean;
                mean += delta / static_cast<double>(k + 1);
                m2 += delta.real() * (v - mean).real() + delta.imag() * (v - mean).imag();
            }
            const double n = static_cast<double>(integrator.n_samples);
            const double se = n > 1 ? std::sqrt(m2 / (n - 1) / n) : 0.0;
            return {mean, direct, std::abs(mean - direct), se};
        }
    }
    throw std::logic_error("unreachable integrator mode");
}

}  // namespace ouc
