#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace ouc {

using Complex = std::complex<double>;

/// Exponents of one monomial z^a zbar^b: a[j] is the power of z_{j+1},
/// b[j] the power of conj(z_{j+1}). Both vectors have length n_vars.
struct Monomial {
    std::vector<int> a;
    std::vector<int> b;

    int total_degree() const;
    bool operator==(const Monomial& other) const = default;
};

/// Graded-lexicographic term order: total degree first, then the a-vector,
/// then the b-vector. Fixes serialization order.
struct GradedLexLess {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

/// Sparse polynomial in z_1..z_n and conj(z_1)..conj(z_n), treated as
/// independent variables (Wirtinger convention). Canonical form: no stored
/// term has coefficient exactly zero, so equality is term-map equality.
///
/// Arithmetic on coefficients is IEEE double; Gaussian-integer coefficients
/// stay exact under +,-,* as long as values remain below 2^53, which covers
/// every exactness guarantee in the test suite.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Complex, GradedLexLess>;

    explicit Polynomial(int n_vars);

    static Polynomial constant(int n_vars, Complex c);
    /// z_j, 1-based coordinate index.
    static Polynomial variable(int n_vars, int j);
    /// conj(z_j), 1-based coordinate index.
    static Polynomial conj_variable(int n_vars, int j);

    int n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; the zero polynomial has degree 0.
    int degree() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Complex coefficient(const Monomial& key) const;
    /// Inserts/overwrites one term; a coefficient equal to zero erases it.
    void set_coefficient(const Monomial& key, Complex value);
    /// Adds into one term, dropping the entry if the sum is exactly zero.
    void add_to_coefficient(const Monomial& key, Complex value);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    bool operator==(const Polynomial& other) const = default;

    /// Multiplies every coefficient by c.
    Polynomial scaled(Complex c) const;
    /// Swaps each (a,b) exponent pair and conjugates coefficients, i.e. the
    /// pointwise complex conjugate of the represented function.
    Polynomial conjugate() const;

    /// Substitutes z_j = point[j-1], conj(z_j) = conj(point[j-1]).
    Complex eval(std::span<const Complex> point) const;

    double max_abs_coefficient() const;

private:
    int n_vars_;
    TermMap terms_;
};

/// Formal partial derivative with respect to z_j (1-based).
Polynomial dz(const Polynomial& p, int j);
/// Formal partial derivative with respect to conj(z_j) (1-based).
Polynomial dzbar(const Polynomial& p, int j);
/// Multiplication by z_j: pure exponent shift, no coefficient arithmetic.
Polynomial mul_by_z(const Polynomial& p, int j);
/// Multiplication by conj(z_j).
Polynomial mul_by_zbar(const Polynomial& p, int j);
/// p^k by repeated multiplication, k >= 0.
Polynomial poly_pow(const Polynomial& p, int k);

}  // namespace ouc
