#pragma once

#include <string>

#include "ouc/chaos.hpp"
#include "ouc/polynomial.hpp"

namespace ouc {

/// {"n_vars": k, "terms": [{"a": [...], "b": [...], "re": x, "im": y}, ...]}
/// with terms in graded-lexicographic order.
std::string polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& text);

/// {"n_vars": k, "coeffs": [{"m": [...], "n": [...], "re": x, "im": y}, ...]}
/// listing orthonormal-basis coefficients in index order; m and n are the
/// canonical (trimmed) index sequences.
std::string expansion_to_json(const ChaosExpansion& e);

}  // namespace ouc
