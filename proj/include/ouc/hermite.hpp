#pragma once

#include <vector>

#include "ouc/polynomial.hpp"

namespace ouc {

/// Creation operator on single-variable polynomials: g -> z*g - 2*d/dzbar(g).
/// This is 2*(adjoint of d/dz) for the standard complex Gaussian.
Polynomial creation_z(const Polynomial& g);
/// Conjugate creation operator: g -> zbar*g - 2*d/dz(g).
Polynomial creation_zbar(const Polynomial& g);

/// Complex Hermite (Hermite-Laguerre-Ito) polynomial of bidegree (m, n) in
/// one variable, built by m applications of creation_z after n applications
/// of creation_zbar to the constant 1. Coefficients are Gaussian integers;
/// the leading term is z^m zbar^n.
Polynomial hermite_polynomial(int m, int n);

/// Squared L2 norm of hermite_polynomial(m, n): m! n! 2^(m+n).
double hermite_squared_norm(int m, int n);

/// Product of per-coordinate complex Hermite polynomials, coordinate k
/// carrying bidegree (m[k], n[k]). With normalized = true each factor is
/// divided by its L2 norm, so the product has unit norm.
Polynomial hermite_product(const std::vector<int>& m, const std::vector<int>& n,
                           int n_vars, bool normalized);

double hermite_product_squared_norm(const std::vector<int>& m, const std::vector<int>& n);

/// Pointwise values of hermite_polynomial(a, b) at z for all a <= max_m,
/// b <= max_n, via the ladder H(a+1,b) = z*H(a,b) - 2b*H(a,b-1) and its
/// conjugate twin. Row-major table of size (max_m+1) x (max_n+1). The ladder
/// is property-tested against the symbolic construction.
std::vector<Complex> hermite_eval_table(Complex z, int max_m, int max_n);

/// Allocation-free variant; out is resized to (max_m+1) x (max_n+1).
void hermite_eval_table_into(Complex z, int max_m, int max_n, std::vector<Complex>& out);

}  // namespace ouc
