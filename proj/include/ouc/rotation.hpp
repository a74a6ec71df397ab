#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ouc/polynomial.hpp"

namespace ouc {

/// Rotation angle of the nonsymmetric Ornstein-Uhlenbeck family, restricted
/// to (-pi/2, pi/2) so the drift coefficient alpha = cos(theta) + i*sin(theta)
/// has positive real part r = cos(theta). cos/sin are computed once so every
/// module sees identical scalar values.
class RotationParams {
public:
    explicit RotationParams(double theta)
        : theta_(theta), cos_(std::cos(theta)), sin_(std::sin(theta)) {
        if (!(theta > -std::numbers::pi / 2 && theta < std::numbers::pi / 2)) {
            throw std::invalid_argument("theta must lie in (-pi/2, pi/2)");
        }
    }

    double theta() const { return theta_; }
    double cos_theta() const { return cos_; }
    double sin_theta() const { return sin_; }
    /// alpha = cos(theta) + i*sin(theta); |alpha| = 1.
    Complex alpha() const { return Complex(cos_, sin_); }
    /// r = Re(alpha) = cos(theta) > 0.
    double r() const { return cos_; }
    RotationParams negated() const { return RotationParams(-theta_); }

private:
    double theta_;
    double cos_;
    double sin_;
};

}  // namespace ouc
