#include "ouc/process.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ouc {

void SDEParams::validate() const {
    if (!(a > 0.0)) throw std::invalid_argument("a must be positive");
    if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be positive");
    if (!(theta > -std::numbers::pi / 2 && theta < std::numbers::pi / 2)) {
        throw std::invalid_argument("theta must lie in (-pi/2, pi/2)");
    }
}

void PathConfig::validate() const {
    if (t_end < 0.0) throw std::invalid_argument("t_end must be nonnegative");
    if (n_steps < 1) throw std::invalid_argument("n_steps must be positive");
}

Complex exact_step(Complex z, double dt, const SDEParams& p, Complex noise) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    const Complex mean = std::exp(-p.alpha() * dt) * z;
    const double scale =
        std::sqrt(p.stationary_coordinate_variance() * (1.0 - std::exp(-2.0 * p.r() * dt)));
    return mean + scale * noise;
}

Complex euler_step(Complex z, double dt, const SDEParams& p, Complex noise) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    // Increment variance 2 sigma2 dt per real coordinate, as in the SDE.
    return (Complex(1.0, 0.0) - p.alpha() * dt) * z + std::sqrt(2.0 * p.sigma2 * dt) * noise;
}

bool euler_is_stable(const SDEParams& p, double dt) {
    return std::abs(Complex(1.0, 0.0) - p.alpha() * dt) < 1.0;
}

std::vector<Complex> sample_path(const PathConfig& cfg, const SDEParams& p) {
    cfg.validate();
    p.validate();
    std::vector<Complex> path;
    path.reserve(cfg.n_steps + 1);
    path.push_back(cfg.z0);
    if (cfg.t_end == 0.0) {
        path.assign(cfg.n_steps + 1, cfg.z0);
        return path;
    }
    Rng rng(cfg.seed);
    const double dt = cfg.dt();
    Complex z = cfg.z0;
    for (int k = 0; k < cfg.n_steps; ++k) {
        const Complex noise = rng.complex_gaussian();
        z = cfg.scheme == PathConfig::Scheme::Exact ? exact_step(z, dt, p, noise)
                                                    : euler_step(z, dt, p, noise);
        path.push_back(z);
    }
    return path;
}

SampleBatch sample_terminal(const PathConfig& cfg, const SDEParams& p, int n_paths) {
    if (n_paths < 1) throw std::invalid_argument("n_paths must be positive");
    SampleBatch batch;
    batch.seed = cfg.seed;
    batch.values.reserve(n_paths);
    const Rng base(cfg.seed);
    for (int k = 0; k < n_paths; ++k) {
        PathConfig local = cfg;
        local.seed = base.fork(static_cast<std::uint64_t>(k)).seed();
        batch.values.push_back(sample_path(local, p).back());
    }
    return batch;
}

SampleBatch sample_stationary(const SDEParams& p, int n, std::uint64_t seed) {
    p.validate();
    if (n < 1) throw std::invalid_argument("sample count must be positive");
    const double sd = std::sqrt(p.stationary_coordinate_variance());
    SampleBatch batch;
    batch.seed = seed;
    batch.values.resize(n);
    Rng rng(seed);
    for (auto& z : batch.values) z = sd * rng.complex_gaussian();
    return batch;
}

namespace {

Complex mixed_power(Complex z, int p, int q) {
    Complex v(1.0, 0.0);
    for (int i = 0; i < p; ++i) v *= z;
    const Complex zb = std::conj(z);
    for (int i = 0; i < q; ++i) v *= zb;
    return v;
}

// Moment rows for the difference of two samplewise-paired statistics
// d_k = f(x_k) - g(y_k); se estimated from the sample of differences.
MomentTestReport compare_moments(const std::vector<Complex>& x, const std::vector<Complex>& y) {
    MomentTestReport report;
    report.n = x.size();
    const double n = static_cast<double>(x.size());
    for (int order = 1; order <= 4; ++order) {
        for (int p = order; p >= 0; --p) {
            const int q = order - p;
            Complex mean(0.0, 0.0);
            double m2 = 0.0;
            for (std::size_t k = 0; k < x.size(); ++k) {
                const Complex d = mixed_power(x[k], p, q) - mixed_power(y[k], p, q);
                const Complex delta = d - mean;
                mean += delta / static_cast<double>(k + 1);
                m2 += delta.real() * (d - mean).real() + delta.imag() * (d - mean).imag();
            }
            MomentRow row;
            row.p = p;
            row.q = q;
            row.difference = mean;
            row.std_error = n > 1 ? std::sqrt(m2 / (n - 1) / n) : 0.0;
            // The absolute floor absorbs floating dust in samplewise-paired
            // moments whose true difference is identically zero.
            row.sigma = std::abs(mean) / (row.std_error + 1e-10);
            report.rows.push_back(row);
        }
    }
    report.max_sigma = 0.0;
    for (const auto& row : report.rows) report.max_sigma = std::max(report.max_sigma, row.sigma);
    report.pass = report.max_sigma <= 3.0;
    return report;
}

}  // namespace

MomentTestReport rotation_invariance_check(std::size_t n, std::uint64_t seed, double angle) {
    if (n < 2) throw std::invalid_argument("need at least two samples");
    Rng rng(seed);
    std::vector<Complex> base(n), rotated(n);
    const Complex phase(std::cos(angle), std::sin(angle));
    for (std::size_t k = 0; k < n; ++k) {
        base[k] = rng.complex_gaussian();
        rotated[k] = phase * base[k];
    }
    return compare_moments(rotated, base);
}

MomentTestReport convolution_check(std::size_t n, std::uint64_t seed, double t, double s) {
    if (n < 2) throw std::invalid_argument("need at least two samples");
    if (t < 0.0 || s < 0.0) throw std::invalid_argument("scales must be nonnegative");
    Rng r1(seed);
    Rng r2 = r1.fork(1);
    Rng r3 = r1.fork(2);
    std::vector<Complex> sum(n), direct(n);
    const double st = std::sqrt(t);
    const double ss = std::sqrt(s);
    const double sts = std::sqrt(t + s);
    for (std::size_t k = 0; k < n; ++k) {
        sum[k] = st * r1.complex_gaussian() + ss * r2.complex_gaussian();
        direct[k] = sts * r3.complex_gaussian();
    }
    return compare_moments(sum, direct);
}

double ks_two_sample_p(std::vector<double> x, std::vector<double> y) {
    if (x.empty() || y.empty()) throw std::invalid_argument("empty sample");
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const double nx = static_cast<double>(x.size());
    const double ny = static_cast<double>(y.size());
    double d = 0.0;
    std::size_t ix = 0, iy = 0;
    while (ix < x.size() && iy < y.size()) {
        const double v = std::min(x[ix], y[iy]);
        while (ix < x.size() && x[ix] <= v) ++ix;
        while (iy < y.size() && y[iy] <= v) ++iy;
        d = std::max(d, std::abs(ix / nx - iy / ny));
    }
    const double ne = std::sqrt(nx * ny / (nx + ny));
    const double lambda = (ne + 0.12 + 0.11 / ne) * d;
    // Kolmogorov tail sum.
    double p = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        p += 2.0 * sign * term;
        sign = -sign;
        if (term < 1e-12) break;
    }
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace ouc
