#include "ouc/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ouc {

namespace {

// Hermite function recurrence evaluated in a normalized form that keeps the
// Newton iteration well conditioned up to a few hundred nodes.
GaussHermiteRule compute_rule(int n) {
    GaussHermiteRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    const double pim4 = 1.0 / std::pow(std::numbers::pi, 0.25);
    const int half = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < half; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(n, 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * rule.nodes[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * rule.nodes[1];
        } else {
            z = 2.0 * z - rule.nodes[i - 2];
        }
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = pim4;
            double p2 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (k + 1)) * p2 - std::sqrt(static_cast<double>(k) / (k + 1)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) <= 1e-16 * (1.0 + std::abs(z))) break;
        }
        rule.nodes[i] = z;
        rule.nodes[n - 1 - i] = -z;
        rule.weights[i] = 2.0 / (pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    if (n % 2 == 1) rule.nodes[half - 1] = 0.0;
    return rule;
}

// Per-coordinate table S(a,b) = integral of z^a conj(z)^b over one standard
// complex Gaussian coordinate, evaluated with the tensor rule.
std::vector<std::vector<Complex>> coordinate_moment_table(const GaussHermiteRule& rule,
                                                          int max_a, int max_b) {
    std::vector<std::vector<Complex>> table(max_a + 1, std::vector<Complex>(max_b + 1, Complex(0, 0)));
    const double sqrt2 = std::numbers::sqrt2;
    const double norm = 1.0 / std::numbers::pi;  // (1/sqrt(pi))^2 for the two axes
    const std::size_t g = rule.nodes.size();
    for (std::size_t kx = 0; kx < g; ++kx) {
        for (std::size_t ky = 0; ky < g; ++ky) {
            const Complex zval(sqrt2 * rule.nodes[kx], sqrt2 * rule.nodes[ky]);
            const Complex zbar = std::conj(zval);
            const double w = rule.weights[kx] * rule.weights[ky] * norm;
            Complex za(1.0, 0.0);
            for (int a = 0; a <= max_a; ++a) {
                Complex zab = za;
                for (int b = 0; b <= max_b; ++b) {
                    table[a][b] += w * zab;
                    zab *= zbar;
                }
                za *= zval;
            }
        }
    }
    return table;
}

Complex integrate(const Polynomial& p, int grid_size) {
    if (grid_size < 1) throw std::invalid_argument("quadrature grid must have at least one node");
    int max_a = 0, max_b = 0, max_axis_degree = 0;
    for (const auto& [key, c] : p.terms()) {
        for (int j = 0; j < p.n_vars(); ++j) {
            max_a = std::max(max_a, key.a[j]);
            max_b = std::max(max_b, key.b[j]);
            max_axis_degree = std::max(max_axis_degree, key.a[j] + key.b[j]);
        }
    }
    if (2 * grid_size - 1 < max_axis_degree) {
        throw std::invalid_argument("quadrature grid too small for exact integration: need at least " +
                                    std::to_string((max_axis_degree + 1) / 2 + (max_axis_degree + 1) % 2) +
                                    " nodes per axis");
    }
    const GaussHermiteRule rule = gauss_hermite_rule(grid_size);
    const auto table = coordinate_moment_table(rule, max_a, max_b);
    Complex acc(0.0, 0.0);
    for (const auto& [key, c] : p.terms()) {
        Complex term = c;
        for (int j = 0; j < p.n_vars(); ++j) term *= table[key.a[j]][key.b[j]];
        acc += term;
    }
    return acc;
}

}  // namespace

GaussHermiteRule gauss_hermite_rule(int n) {
    if (n < 1) throw std::invalid_argument("rule size must be positive");
    return compute_rule(n);
}

Complex quadrature_mean(const Polynomial& p, int grid_size) {
    return integrate(p, grid_size);
}

Complex quadrature_inner_product(const Polynomial& p, const Polynomial& q, int grid_size) {
    if (p.n_vars() != q.n_vars()) {
        throw std::invalid_argument("inner product operands have different n_vars");
    }
    return integrate(p * q.conjugate(), grid_size);
}

}  // namespace ouc
