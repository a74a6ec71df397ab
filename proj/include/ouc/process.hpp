#pragma once

#include <cstdint>
#include <vector>

#include "ouc/polynomial.hpp"
#include "ouc/rng.hpp"

namespace ouc {

/// Parameters of the complex Ornstein-Uhlenbeck equation
///   dZ_t = -alpha Z_t dt + sqrt(2 sigma2) d(zeta_t),
/// alpha = a e^{i theta}, zeta a complex Brownian motion with independent
/// standard real and imaginary parts. Ergodic since r = a cos(theta) > 0;
/// the stationary variance per real coordinate is sigma2 / r.
struct SDEParams {
    double a = 1.0;
    double theta = 0.0;
    double sigma2 = 1.0;

    void validate() const;
    Complex alpha() const { return a * Complex(std::cos(theta), std::sin(theta)); }
    double r() const { return a * std::cos(theta); }
    double omega() const { return a * std::sin(theta); }
    double stationary_coordinate_variance() const { return sigma2 / r(); }

    /// a = 1, sigma2 = cos(theta): the family whose stationary law is the
    /// standard complex Gaussian and whose transition matches the averaging
    /// form of the semigroup.
    static SDEParams normalized(double theta) { return {1.0, theta, std::cos(theta)}; }
};

struct PathConfig {
    enum class Scheme { Exact, Euler };

    Complex z0{0.0, 0.0};
    double t_end = 1.0;
    int n_steps = 1;
    std::uint64_t seed = 0;
    Scheme scheme = Scheme::Exact;

    void validate() const;
    double dt() const { return t_end / n_steps; }
};

/// One transition with the exact conditional law: mean e^{-alpha dt} z and
/// E|z' - mean|^2 = 2 (sigma2/r)(1 - e^{-2 r dt}); noise is a unit complex
/// Gaussian draw (independent standard normal parts).
Complex exact_step(Complex z, double dt, const SDEParams& p, Complex noise);

/// Explicit Euler step z' = (1 - alpha dt) z + sqrt(2 sigma2 dt) * noise,
/// matching the exact transition variance to first order in dt.
Complex euler_step(Complex z, double dt, const SDEParams& p, Complex noise);

/// Mean-reversion stability of the explicit Euler map: |1 - alpha dt| < 1.
bool euler_is_stable(const SDEParams& p, double dt);

/// Path including the initial point (length n_steps + 1). Deterministic in
/// the seed.
std::vector<Complex> sample_path(const PathConfig& cfg, const SDEParams& p);

struct SampleBatch {
    std::vector<Complex> values;
    std::uint64_t seed = 0;
};

/// Terminal values of n_paths independent paths; path k uses the child
/// stream fork(k) of the config seed, so batches are mergeable and the
/// sampling is embarrassingly parallel.
SampleBatch sample_terminal(const PathConfig& cfg, const SDEParams& p, int n_paths);

/// n draws from the stationary law of p.
SampleBatch sample_stationary(const SDEParams& p, int n, std::uint64_t seed);

struct MomentRow {
    int p = 0;                // power of z
    int q = 0;                // power of conj(z)
    Complex difference;       // estimator difference being tested
    double std_error = 0.0;   // standard error of that difference
    double sigma = 0.0;       // |difference| / std_error (0 when both vanish)
};

struct MomentTestReport {
    std::size_t n = 0;
    std::vector<MomentRow> rows;   // all mixed moments of order <= 4
    double max_sigma = 0.0;
    bool pass = false;             // every row within 3 standard errors
};

/// Empirical check that the standard complex Gaussian is invariant under
/// z -> e^{i angle} z: compares all mixed moments of order <= 4 between a
/// rotated batch and the same batch, each difference within 3 SE.
MomentTestReport rotation_invariance_check(std::size_t n, std::uint64_t seed, double angle);

/// Convolution of scaled copies: sqrt(t) xi + sqrt(s) xi' against
/// sqrt(t+s) xi'' on independent batches, same moment comparison.
MomentTestReport convolution_check(std::size_t n, std::uint64_t seed, double t, double s);

/// Two-sample Kolmogorov-Smirnov p-value (asymptotic).
double ks_two_sample_p(std::vector<double> x, std::vector<double> y);

}  // namespace ouc
