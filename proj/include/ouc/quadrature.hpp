#pragma once

#include <vector>

#include "ouc/polynomial.hpp"

namespace ouc {

/// Nodes and weights for the weight function exp(-x^2) on the real line.
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule, exact for polynomials of degree <= 2n - 1.
GaussHermiteRule gauss_hermite_rule(int n);

/// Integral of p against the product standard complex Gaussian, computed by
/// a tensor Gauss-Hermite grid with grid_size nodes per real axis. Throws if
/// the grid cannot integrate the polynomial exactly.
Complex quadrature_mean(const Polynomial& p, int grid_size);

/// Quadrature counterpart of GaussianMeasure::inner_product; an independent
/// numerical oracle for the moment engine.
Complex quadrature_inner_product(const Polynomial& p, const Polynomial& q, int grid_size);

}  // namespace ouc
