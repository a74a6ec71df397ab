#pragma once

#include <cstdint>
#include <span>

#include "ouc/chaos.hpp"
#include "ouc/polynomial.hpp"
#include "ouc/rotation.hpp"

namespace ouc {

/// Integration backend for the averaging form of the semigroup.
struct Integrator {
    enum class Mode { ExactMoment, Quadrature, MonteCarlo };

    Mode mode = Mode::ExactMoment;
    int grid_size = 0;           // Quadrature nodes per real axis
    long n_samples = 0;          // MonteCarlo sample count
    std::uint64_t seed = 0;

    static Integrator exact_moment() { return {}; }
    static Integrator quadrature(int grid_size) {
        return {Mode::Quadrature, grid_size, 0, 0};
    }
    static Integrator monte_carlo(long n_samples, std::uint64_t seed) {
        return {Mode::MonteCarlo, 0, n_samples, seed};
    }
};

/// exp(-[(m+n) cos(theta) + i (m-n) sin(theta)] t). |multiplier| <= 1 for
/// t >= 0, so the semigroup contracts every chaos component.
Complex semigroup_multiplier(int total_m, int total_n, double t, const RotationParams& params);

/// Semigroup in spectral form: each coefficient of bidegree (m, n) picks up
/// the eigen multiplier. Rejects t < 0.
ChaosExpansion spectral_semigroup(const ChaosExpansion& e, double t, const RotationParams& params);

/// Averaging form of the semigroup applied symbolically: substitutes
/// z -> e^{-alpha t} x + sqrt(1 - e^{-2 t cos(theta)}) y and integrates the
/// y-variables out exactly, returning the resulting polynomial in x.
Polynomial semigroup_polynomial(const Polynomial& f, double t, const RotationParams& params);

struct MehlerValue {
    Complex value;
    double std_error = 0.0;  // zero for the deterministic backends
};

/// (T_t f)(x) through the chosen backend. ExactMoment integrates the shifted
/// polynomial termwise, Quadrature uses a tensor Gauss-Hermite grid, and
/// MonteCarlo averages f(e^{-alpha t} x + c y) over seeded Gaussian draws.
MehlerValue mehler_apply(const Polynomial& f, std::span<const Complex> x, double t,
                         const RotationParams& params, const Integrator& integrator);

/// |T_s T_t f - T_{s+t} f| at x, exact backend, scaled by 1 + |T_{s+t} f(x)|.
double chapman_kolmogorov_residual(const Polynomial& f, std::span<const Complex> x,
                                   double s, double t, const RotationParams& params);

struct InvarianceResult {
    Complex semigroup_mean;
    Complex direct_mean;
    double residual;     // |difference| / (1 + |direct_mean|)
    double std_error;    // zero in exact mode
};

/// Compares the mean of T_t f under the stationary measure with the mean of
/// f. Exact mode uses the moment oracle on both sides; Monte Carlo mode
/// averages exact semigroup values over sampled stationary points.
InvarianceResult invariance_check(const Polynomial& f, double t, const RotationParams& params,
                                  const Integrator& integrator);

}  // namespace ouc
