#pragma once

#include "ouc/polynomial.hpp"

namespace ouc {

/// Product of independent standard complex Gaussian coordinates:
/// z_j = x_j + i*y_j with x_j, y_j independent N(0,1), so E[z_j conj(z_j)] = 2.
/// Mixed moments E[z^a conj(z)^b] vanish unless a == b and equal 2^a a!
/// otherwise; these values are exact doubles through a = 22.
struct GaussianMeasure {
    int n_vars;

    /// E[z^a conj(z)^b] for one coordinate.
    static double coordinate_moment(int a, int b);

    /// Integral of p against the measure.
    Complex mean(const Polynomial& p) const;

    /// L2 inner product: integral of p * conj(q). Conjugate-symmetric.
    Complex inner_product(const Polynomial& p, const Polynomial& q) const;
};

}  // namespace ouc
