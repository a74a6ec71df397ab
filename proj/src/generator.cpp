#include "ouc/generator.hpp"

#include <stdexcept>

namespace ouc {

Polynomial mixed_laplacian(const Polynomial& f) {
    Polynomial out(f.n_vars());
    for (const auto& [key, c] : f.terms()) {
        for (int j = 0; j < f.n_vars(); ++j) {
            const int a = key.a[j];
            const int b = key.b[j];
            if (a == 0 || b == 0) continue;
            Monomial shifted = key;
            shifted.a[j] = a - 1;
            shifted.b[j] = b - 1;
            out.add_to_coefficient(shifted, static_cast<double>(a) * static_cast<double>(b) * c);
        }
    }
    return out;
}

Polynomial radial_z(const Polynomial& f) {
    Polynomial out(f.n_vars());
    for (const auto& [key, c] : f.terms()) {
        int total_a = 0;
        for (int j = 0; j < f.n_vars(); ++j) total_a += key.a[j];
        if (total_a != 0) out.set_coefficient(key, static_cast<double>(total_a) * c);
    }
    return out;
}

Polynomial radial_zbar(const Polynomial& f) {
    Polynomial out(f.n_vars());
    for (const auto& [key, c] : f.terms()) {
        int total_b = 0;
        for (int j = 0; j < f.n_vars(); ++j) total_b += key.b[j];
        if (total_b != 0) out.set_coefficient(key, static_cast<double>(total_b) * c);
    }
    return out;
}

Polynomial combine_rotated(const Polynomial& u, const Polynomial& v, const RotationParams& params) {
    if (u.n_vars() != v.n_vars()) throw std::invalid_argument("combine_rotated operands differ in n_vars");
    const double c = params.cos_theta();
    const double s = params.sin_theta();
    Polynomial out(u.n_vars());
    for (const auto& [key, uc] : u.terms()) out.add_to_coefficient(key, c * uc);
    for (const auto& [key, vc] : v.terms()) {
        out.add_to_coefficient(key, Complex(-s * vc.imag(), s * vc.real()));
    }
    return out;
}

Polynomial apply_generator(const Polynomial& f, const RotationParams& params) {
    // L f = cos(theta) (4 S - P - Q) + i sin(theta) (Q - P) with
    // S = mixed_laplacian, P = radial_z, Q = radial_zbar; the integer-exact
    // combinations are built first and scaled once.
    const Polynomial s4 = mixed_laplacian(f).scaled(Complex(4.0, 0.0));
    const Polynomial p = radial_z(f);
    const Polynomial q = radial_zbar(f);
    return combine_rotated(s4 - p - q, q - p, params);
}

Complex HDerivative::apply(std::span<const Complex> x, std::span<const Complex> h) const {
    if (h.size() != linear_part.size()) {
        throw std::invalid_argument("direction length does not match derivative arity");
    }
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < linear_part.size(); ++j) {
        acc += linear_part[j].eval(x) * h[j] + conjugate_part[j].eval(x) * std::conj(h[j]);
    }
    return acc;
}

HDerivative gateaux_derivative(const Polynomial& f, const RotationParams& params) {
    const Complex phase = params.alpha();
    HDerivative d;
    d.linear_part.reserve(f.n_vars());
    d.conjugate_part.reserve(f.n_vars());
    for (int j = 1; j <= f.n_vars(); ++j) {
        d.linear_part.push_back(dz(f, j).scaled(phase));
        d.conjugate_part.push_back(dzbar(f, j).scaled(std::conj(phase)));
    }
    return d;
}

Polynomial trace_second_derivative(const Polynomial& f, const RotationParams& params) {
    Polynomial sum(f.n_vars());
    for (int j = 1; j <= f.n_vars(); ++j) sum += dz(dzbar(f, j), j);
    return sum.scaled(Complex(4.0 * params.cos_theta(), 0.0));
}

Polynomial generator_identity_residual(const Polynomial& f, const RotationParams& params) {
    const Polynomial lhs = apply_generator(f, params);

    // Right side from the trace and gradient machinery: the raw Wirtinger
    // pieces are recomputed here through dz/dzbar composition rather than the
    // single-pass kernels above, then fed to the same scalar combiner.
    Polynomial trace_raw(f.n_vars());
    Polynomial pairing_z(f.n_vars());
    Polynomial pairing_zbar(f.n_vars());
    for (int j = 1; j <= f.n_vars(); ++j) {
        const Polynomial fj = dz(f, j);
        const Polynomial fjbar = dzbar(f, j);
        trace_raw += dzbar(fj, j);
        pairing_z += mul_by_z(fj, j);
        pairing_zbar += mul_by_zbar(fjbar, j);
    }
    const Polynomial rhs = combine_rotated(
        trace_raw.scaled(Complex(4.0, 0.0)) - pairing_z - pairing_zbar,
        pairing_zbar - pairing_z, params);
    return lhs - rhs;
}

DirectionalCheck directional_check(const Polynomial& f, std::span<const Complex> x,
                                   std::span<const Complex> h, const RotationParams& params,
                                   double dt) {
    if (dt <= 0.0) throw std::invalid_argument("finite-difference step must be positive");
    if (static_cast<int>(x.size()) != f.n_vars() || static_cast<int>(h.size()) != f.n_vars()) {
        throw std::invalid_argument("point/direction length does not match n_vars");
    }
    DirectionalCheck out;
    out.analytic = gateaux_derivative(f, params).apply(x, h);

    const Complex phase = params.alpha();
    std::vector<Complex> forward(x.begin(), x.end());
    std::vector<Complex> backward(x.begin(), x.end());
    for (int j = 0; j < f.n_vars(); ++j) {
        const Complex shift = phase * dt * h[j];
        forward[j] += shift;
        backward[j] -= shift;
    }
    out.finite_difference = (f.eval(forward) - f.eval(backward)) / (2.0 * dt);
    return out;
}

}  // namespace ouc
