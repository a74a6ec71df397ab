#pragma once

#include <cstdint>
#include <vector>

#include "ouc/polynomial.hpp"

namespace ouc {

/// Deterministic, splittable random generator (xoshiro256** seeded through
/// splitmix64). The same seed yields the same stream on every platform;
/// fork() derives statistically independent child streams, one per path or
/// scan cell.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform01();
    /// Standard normal via Box-Muller (pairs cached).
    double normal();
    /// g1 + i*g2 with independent standard normal parts, so E|xi|^2 = 2.
    Complex complex_gaussian();

    /// Independent child stream; deterministic in (seed, stream).
    Rng fork(std::uint64_t stream) const;
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// n independent samples from the standard complex Gaussian coordinate law.
std::vector<Complex> gaussian_vector(int n, Rng& rng);

/// Random sparse polynomial with Gaussian-integer coefficients in
/// [-max_coeff, max_coeff]^2 \ {0} and total degree <= max_degree.
/// Always returns a nonzero polynomial.
Polynomial random_gaussian_integer_polynomial(int n_vars, int max_degree, int max_coeff, Rng& rng);

}  // namespace ouc
