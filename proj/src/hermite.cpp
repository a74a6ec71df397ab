#include "ouc/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace ouc {

namespace {

void require_single_variable(const Polynomial& g) {
    if (g.n_vars() != 1) throw std::invalid_argument("creation operators act on single-variable polynomials");
}

void require_bidegree(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("Hermite bidegree must be nonnegative");
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Lifts a single-variable polynomial to coordinate j of an n_vars space.
Polynomial lift(const Polynomial& p, int n_vars, int j) {
    Polynomial out(n_vars);
    for (const auto& [key, c] : p.terms()) {
        Monomial lifted{std::vector<int>(n_vars, 0), std::vector<int>(n_vars, 0)};
        lifted.a[j] = key.a[0];
        lifted.b[j] = key.b[0];
        out.set_coefficient(lifted, c);
    }
    return out;
}

}  // namespace

Polynomial creation_z(const Polynomial& g) {
    require_single_variable(g);
    return mul_by_z(g, 1) - dzbar(g, 1).scaled(Complex(2.0, 0.0));
}

Polynomial creation_zbar(const Polynomial& g) {
    require_single_variable(g);
    return mul_by_zbar(g, 1) - dz(g, 1).scaled(Complex(2.0, 0.0));
}

Polynomial hermite_polynomial(int m, int n) {
    require_bidegree(m, n);
    Polynomial p = Polynomial::constant(1, Complex(1.0, 0.0));
    for (int k = 0; k < n; ++k) p = creation_zbar(p);
    for (int k = 0; k < m; ++k) p = creation_z(p);
    return p;
}

double hermite_squared_norm(int m, int n) {
    require_bidegree(m, n);
    double norm = 1.0;
    for (int k = 0; k < m + n; ++k) norm *= 2.0;
    return norm * factorial(m) * factorial(n);
}

Polynomial hermite_product(const std::vector<int>& m, const std::vector<int>& n,
                           int n_vars, bool normalized) {
    if (m.size() != n.size()) throw std::invalid_argument("bidegree sequences differ in length");
    if (static_cast<int>(m.size()) > n_vars) {
        throw std::invalid_argument("bidegree support exceeds n_vars");
    }
    Polynomial out = Polynomial::constant(n_vars, Complex(1.0, 0.0));
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0 && n[k] == 0) continue;
        out = out * lift(hermite_polynomial(m[k], n[k]), n_vars, static_cast<int>(k));
    }
    if (normalized) {
        // One scale at the end keeps dyadic norms (e.g. 1/2) exact.
        out = out.scaled(Complex(1.0 / std::sqrt(hermite_product_squared_norm(m, n)), 0.0));
    }
    return out;
}

double hermite_product_squared_norm(const std::vector<int>& m, const std::vector<int>& n) {
    if (m.size() != n.size()) throw std::invalid_argument("bidegree sequences differ in length");
    double norm = 1.0;
    for (std::size_t k = 0; k < m.size(); ++k) norm *= hermite_squared_norm(m[k], n[k]);
    return norm;
}

std::vector<Complex> hermite_eval_table(Complex z, int max_m, int max_n) {
    std::vector<Complex> table;
    hermite_eval_table_into(z, max_m, max_n, table);
    return table;
}

void hermite_eval_table_into(Complex z, int max_m, int max_n, std::vector<Complex>& table) {
    require_bidegree(max_m, max_n);
    const int cols = max_n + 1;
    table.resize(static_cast<std::size_t>(max_m + 1) * cols);
    const Complex zbar = std::conj(z);
    table[0] = Complex(1.0, 0.0);
    // m = 0 row reduces to plain powers of zbar.
    for (int b = 1; b <= max_n; ++b) table[b] = zbar * table[b - 1];
    for (int a = 1; a <= max_m; ++a) {
        for (int b = 0; b <= max_n; ++b) {
            Complex value = z * table[static_cast<std::size_t>(a - 1) * cols + b];
            if (b > 0) value -= 2.0 * static_cast<double>(b) * table[static_cast<std::size_t>(a - 1) * cols + (b - 1)];
            table[static_cast<std::size_t>(a) * cols + b] = value;
        }
    }
}

}  // namespace ouc
