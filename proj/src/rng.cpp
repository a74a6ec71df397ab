#include "ouc/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ouc {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 is kept away from 0 so the log is finite.
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex Rng::complex_gaussian() {
    const double g1 = normal();
    const double g2 = normal();
    return Complex(g1, g2);
}

Rng Rng::fork(std::uint64_t stream) const {
    std::uint64_t s = seed_ ^ (0xD1B54A32D192ED03ULL * (stream + 1));
    return Rng(splitmix64(s));
}

std::vector<Complex> gaussian_vector(int n, Rng& rng) {
    std::vector<Complex> out(static_cast<std::size_t>(n));
    for (auto& z : out) z = rng.complex_gaussian();
    return out;
}

Polynomial random_gaussian_integer_polynomial(int n_vars, int max_degree, int max_coeff, Rng& rng) {
    if (max_degree < 0 || max_coeff < 1) {
        throw std::invalid_argument("random polynomial needs max_degree >= 0, max_coeff >= 1");
    }
    Polynomial p(n_vars);
    const std::size_t target_terms = static_cast<std::size_t>(2 + rng.next_u64() % (2 * max_degree + 3));
    auto random_int = [&](int lo, int hi) {
        return lo + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    for (std::size_t k = 0; k < target_terms; ++k) {
        Monomial key{std::vector<int>(n_vars, 0), std::vector<int>(n_vars, 0)};
        int budget = random_int(0, max_degree);
        while (budget > 0) {
            const int j = random_int(0, n_vars - 1);
            if (random_int(0, 1) == 0) {
                key.a[j] += 1;
            } else {
                key.b[j] += 1;
            }
            --budget;
        }
        int re = 0, im = 0;
        while (re == 0 && im == 0) {
            re = random_int(-max_coeff, max_coeff);
            im = random_int(-max_coeff, max_coeff);
        }
        p.add_to_coefficient(key, Complex(re, im));
    }
    if (p.is_zero()) {
        p.set_coefficient(Monomial{std::vector<int>(n_vars, 0), std::vector<int>(n_vars, 0)},
                          Complex(1.0, 0.0));
    }
    return p;
}

}  // namespace ouc
