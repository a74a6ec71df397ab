#pragma once

#include <map>
#include <vector>

#include "ouc/hermite.hpp"
#include "ouc/measure.hpp"
#include "ouc/polynomial.hpp"

namespace ouc {

/// Index of one product-basis element: coordinate k carries Hermite bidegree
/// (m[k], n[k]). Canonical form trims trailing (0,0) pairs so equality is
/// structural.
struct ChaosIndex {
    std::vector<int> m;
    std::vector<int> n;

    static ChaosIndex of(std::vector<int> m, std::vector<int> n);
    void canonicalize();
    int total_m() const;
    int total_n() const;
    int support() const { return static_cast<int>(m.size()); }
    bool operator==(const ChaosIndex& other) const = default;
};

/// Order: total degree |m|+|n| first, then lexicographic on the concatenated
/// (m, n) exponents. Deterministic expansion enumeration.
struct ChaosIndexLess {
    bool operator()(const ChaosIndex& lhs, const ChaosIndex& rhs) const;
};

/// Squared L2 norm of the unnormalized product basis polynomial at idx.
double chaos_norm_squared(const ChaosIndex& idx);

/// Normalized product basis polynomial (unit L2 norm) in n_vars variables.
Polynomial basis_polynomial(const ChaosIndex& idx, int n_vars);

/// Spectral form of a polynomial: coefficients against the orthonormal
/// product basis. Internally the coefficient against the unnormalized
/// integer-coefficient basis is stored, which keeps reconstruction and
/// Parseval sums exact for Gaussian-integer inputs; the public accessors
/// report the orthonormal-basis coefficient.
class ChaosExpansion {
public:
    using RawMap = std::map<ChaosIndex, Complex, ChaosIndexLess>;

    explicit ChaosExpansion(int n_vars);

    int n_vars() const { return n_vars_; }
    std::size_t size() const { return raw_.size(); }
    const RawMap& raw_terms() const { return raw_; }

    Complex raw_coefficient(const ChaosIndex& idx) const;
    /// Coefficient against the unit-norm basis element at idx.
    Complex coefficient(const ChaosIndex& idx) const;
    void set_raw_coefficient(const ChaosIndex& idx, Complex value);

    /// Sum of squared orthonormal-basis coefficients; equals the squared
    /// L2 norm of the represented function.
    double parseval_sum() const;

private:
    int n_vars_;
    RawMap raw_;
};

/// All canonical indices with support <= n_vars and |m|+|n| <= max_total.
std::vector<ChaosIndex> enumerate_chaos_indices(int n_vars, int max_total);

/// Orthogonal expansion of a polynomial; finite and exact by construction.
ChaosExpansion expand(const Polynomial& f);

/// Sum of coefficient * basis polynomial; inverse of expand on polynomials.
Polynomial reconstruct(const ChaosExpansion& e);

/// Component of f in the chaos of bidegree (m, n): the part of the expansion
/// with |m_idx| = m, |n_idx| = n, returned as a polynomial. Idempotent, and
/// projections for distinct bidegrees are mutually orthogonal.
Polynomial project(const Polynomial& f, int m, int n);

}  // namespace ouc
