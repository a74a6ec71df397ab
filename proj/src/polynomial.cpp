#include "ouc/polynomial.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ouc {

namespace {

void require_same_vars(const Polynomial& p, const Polynomial& q) {
    if (p.n_vars() != q.n_vars()) {
        throw std::invalid_argument("polynomial operands have different n_vars (" +
                                    std::to_string(p.n_vars()) + " vs " +
                                    std::to_string(q.n_vars()) + ")");
    }
}

void require_coordinate(const Polynomial& p, int j) {
    if (j < 1 || j > p.n_vars()) {
        throw std::invalid_argument("coordinate index out of range");
    }
}

}  // namespace

int Monomial::total_degree() const {
    int d = 0;
    for (int e : a) d += e;
    for (int e : b) d += e;
    return d;
}

bool GradedLexLess::operator()(const Monomial& lhs, const Monomial& rhs) const {
    const int dl = lhs.total_degree();
    const int dr = rhs.total_degree();
    if (dl != dr) return dl < dr;
    // Within a degree block, higher leading exponents print first, so e.g.
    // z1^2 precedes z1 zbar1 precedes zbar1^2 and z1 precedes z2.
    if (lhs.a != rhs.a) return lhs.a > rhs.a;
    return lhs.b > rhs.b;
}

Polynomial::Polynomial(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 1) throw std::invalid_argument("n_vars must be positive");
}

Polynomial Polynomial::constant(int n_vars, Complex c) {
    Polynomial p(n_vars);
    p.set_coefficient(Monomial{std::vector<int>(n_vars, 0), std::vector<int>(n_vars, 0)}, c);
    return p;
}

Polynomial Polynomial::variable(int n_vars, int j) {
    Polynomial p(n_vars);
    require_coordinate(p, j);
    Monomial key{std::vector<int>(n_vars, 0), std::vector<int>(n_vars, 0)};
    key.a[j - 1] = 1;
    p.set_coefficient(key, Complex(1.0, 0.0));
    return p;
}

Polynomial Polynomial::conj_variable(int n_vars, int j) {
    Polynomial p(n_vars);
    require_coordinate(p, j);
    Monomial key{std::vector<int>(n_vars, 0), std::vector<int>(n_vars, 0)};
    key.b[j - 1] = 1;
    p.set_coefficient(key, Complex(1.0, 0.0));
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return 0;
    // Map is graded, so the last term has maximal total degree.
    return terms_.rbegin()->first.total_degree();
}

Complex Polynomial::coefficient(const Monomial& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

void Polynomial::set_coefficient(const Monomial& key, Complex value) {
    if (static_cast<int>(key.a.size()) != n_vars_ || static_cast<int>(key.b.size()) != n_vars_) {
        throw std::invalid_argument("monomial exponent length does not match n_vars");
    }
    if (value == Complex(0.0, 0.0)) {
        terms_.erase(key);
    } else {
        terms_[key] = value;
    }
}

void Polynomial::add_to_coefficient(const Monomial& key, Complex value) {
    if (static_cast<int>(key.a.size()) != n_vars_ || static_cast<int>(key.b.size()) != n_vars_) {
        throw std::invalid_argument("monomial exponent length does not match n_vars");
    }
    auto [it, inserted] = terms_.try_emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
    } else if (value == Complex(0.0, 0.0)) {
        terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_vars(*this, other);
    for (const auto& [key, c] : other.terms_) add_to_coefficient(key, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_vars(*this, other);
    for (const auto& [key, c] : other.terms_) add_to_coefficient(key, -c);
    return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
}

Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    require_same_vars(lhs, rhs);
    Polynomial out(lhs.n_vars());
    const int n = lhs.n_vars();
    for (const auto& [ka, ca] : lhs.terms()) {
        for (const auto& [kb, cb] : rhs.terms()) {
            Monomial key = ka;
            for (int j = 0; j < n; ++j) {
                key.a[j] += kb.a[j];
                key.b[j] += kb.b[j];
            }
            out.add_to_coefficient(key, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(Complex c) const {
    Polynomial out(n_vars_);
    if (c == Complex(0.0, 0.0)) return out;
    for (const auto& [key, v] : terms_) out.set_coefficient(key, c * v);
    return out;
}

Polynomial Polynomial::conjugate() const {
    Polynomial out(n_vars_);
    for (const auto& [key, v] : terms_) {
        out.set_coefficient(Monomial{key.b, key.a}, std::conj(v));
    }
    return out;
}

Complex Polynomial::eval(std::span<const Complex> point) const {
    if (static_cast<int>(point.size()) != n_vars_) {
        throw std::invalid_argument("evaluation point length does not match n_vars");
    }
    const int max_deg = degree();
    // Power tables per coordinate for z and conj(z).
    std::vector<std::vector<Complex>> pow_z(n_vars_), pow_zbar(n_vars_);
    for (int j = 0; j < n_vars_; ++j) {
        pow_z[j].assign(max_deg + 1, Complex(1.0, 0.0));
        pow_zbar[j].assign(max_deg + 1, Complex(1.0, 0.0));
        const Complex zb = std::conj(point[j]);
        for (int k = 1; k <= max_deg; ++k) {
            pow_z[j][k] = pow_z[j][k - 1] * point[j];
            pow_zbar[j][k] = pow_zbar[j][k - 1] * zb;
        }
    }
    Complex acc(0.0, 0.0);
    for (const auto& [key, c] : terms_) {
        Complex term = c;
        for (int j = 0; j < n_vars_; ++j) {
            if (key.a[j] > 0) term *= pow_z[j][key.a[j]];
            if (key.b[j] > 0) term *= pow_zbar[j][key.b[j]];
        }
        acc += term;
    }
    return acc;
}

double Polynomial::max_abs_coefficient() const {
    double best = 0.0;
    for (const auto& [key, c] : terms_) best = std::max(best, std::abs(c));
    return best;
}

Polynomial dz(const Polynomial& p, int j) {
    require_coordinate(p, j);
    Polynomial out(p.n_vars());
    for (const auto& [key, c] : p.terms()) {
        const int e = key.a[j - 1];
        if (e == 0) continue;
        Monomial shifted = key;
        shifted.a[j - 1] = e - 1;
        out.add_to_coefficient(shifted, static_cast<double>(e) * c);
    }
    return out;
}

Polynomial dzbar(const Polynomial& p, int j) {
    require_coordinate(p, j);
    Polynomial out(p.n_vars());
    for (const auto& [key, c] : p.terms()) {
        const int e = key.b[j - 1];
        if (e == 0) continue;
        Monomial shifted = key;
        shifted.b[j - 1] = e - 1;
        out.add_to_coefficient(shifted, static_cast<double>(e) * c);
    }
    return out;
}

Polynomial mul_by_z(const Polynomial& p, int j) {
    require_coordinate(p, j);
    Polynomial out(p.n_vars());
    for (const auto& [key, c] : p.terms()) {
        Monomial shifted = key;
        shifted.a[j - 1] += 1;
        out.set_coefficient(shifted, c);
    }
    return out;
}

Polynomial mul_by_zbar(const Polynomial& p, int j) {
    require_coordinate(p, j);
    Polynomial out(p.n_vars());
    for (const auto& [key, c] : p.terms()) {
        Monomial shifted = key;
        shifted.b[j - 1] += 1;
        out.set_coefficient(shifted, c);
    }
    return out;
}

Polynomial poly_pow(const Polynomial& p, int k) {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial out = Polynomial::constant(p.n_vars(), Complex(1.0, 0.0));
    for (int i = 0; i < k; ++i) out = out * p;
    return out;
}

}  // namespace ouc
