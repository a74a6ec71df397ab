#pragma once

#include <span>
#include <vector>

#include "ouc/polynomial.hpp"
#include "ouc/rotation.hpp"

namespace ouc {

/// Sum over coordinates of d/dz_j d/dzbar_j f. Exact for exact coefficients.
Polynomial mixed_laplacian(const Polynomial& f);
/// Sum over coordinates of z_j * d/dz_j f (diagonal in the monomial basis).
Polynomial radial_z(const Polynomial& f);
/// Sum over coordinates of zbar_j * d/dzbar_j f.
Polynomial radial_zbar(const Polynomial& f);

/// cos(theta)*u + i*sin(theta)*v, applied coefficientwise with one scalar
/// multiplication per part. All rotation-dependent scaling funnels through
/// here, so independently assembled exact integer inputs produce bitwise
/// identical results.
Polynomial combine_rotated(const Polynomial& u, const Polynomial& v, const RotationParams& params);

/// Nonsymmetric Ornstein-Uhlenbeck generator
///   L f = 4 cos(theta) sum_j dz_j dzbar_j f
///         - sum_j [ e^{i theta} z_j dz_j f + e^{-i theta} zbar_j dzbar_j f ].
/// Complex Hermite products of bidegree (m, n) are eigenfunctions with
/// eigenvalue -[(m+n) cos(theta) + i (m-n) sin(theta)].
Polynomial apply_generator(const Polynomial& f, const RotationParams& params);

/// Rotated gradient pair: linear components e^{i theta} dz_j f and
/// conjugate-linear components e^{-i theta} dzbar_j f, kept as polynomials
/// and evaluated at a point on demand.
struct HDerivative {
    std::vector<Polynomial> linear_part;
    std::vector<Polynomial> conjugate_part;

    /// Pairing with a direction h at the point x:
    /// sum_j linear_j(x) h_j + conjugate_j(x) conj(h_j).
    Complex apply(std::span<const Complex> x, std::span<const Complex> h) const;
};

HDerivative gateaux_derivative(const Polynomial& f, const RotationParams& params);

/// Trace of the second rotated derivative on cylindrical functions:
/// 4 cos(theta) sum_j dz_j dzbar_j f.
Polynomial trace_second_derivative(const Polynomial& f, const RotationParams& params);

/// apply_generator(f) minus [trace_second_derivative(f) - <x, gradient pairing>],
/// the two sides assembled through independent code paths. Exactly the zero
/// polynomial for exact-coefficient inputs.
Polynomial generator_identity_residual(const Polynomial& f, const RotationParams& params);

struct DirectionalCheck {
    Complex analytic;
    Complex finite_difference;
};

/// Derivative of t -> f(x + e^{i theta} t h) at t = 0: the analytic value via
/// the rotated gradient pairing next to a central finite difference of step dt.
DirectionalCheck directional_check(const Polynomial& f, std::span<const Complex> x,
                                   std::span<const Complex> h, const RotationParams& params,
                                   double dt);

}  // namespace ouc
