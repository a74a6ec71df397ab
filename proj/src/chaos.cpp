#include "ouc/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ouc {

ChaosIndex ChaosIndex::of(std::vector<int> m, std::vector<int> n) {
    if (m.size() != n.size()) throw std::invalid_argument("chaos index sequences differ in length");
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] < 0 || n[k] < 0) throw std::invalid_argument("chaos index entries must be nonnegative");
    }
    ChaosIndex idx{std::move(m), std::move(n)};
    idx.canonicalize();
    return idx;
}

void ChaosIndex::canonicalize() {
    while (!m.empty() && m.back() == 0 && n.back() == 0) {
        m.pop_back();
        n.pop_back();
    }
}

int ChaosIndex::total_m() const {
    int s = 0;
    for (int e : m) s += e;
    return s;
}

int ChaosIndex::total_n() const {
    int s = 0;
    for (int e : n) s += e;
    return s;
}

bool ChaosIndexLess::operator()(const ChaosIndex& lhs, const ChaosIndex& rhs) const {
    const int dl = lhs.total_m() + lhs.total_n();
    const int dr = rhs.total_m() + rhs.total_n();
    if (dl != dr) return dl < dr;
    // Same convention as the monomial order: within a degree block, higher
    // leading entries come first (padding with zeros on the right).
    const std::size_t len = std::max(lhs.m.size(), rhs.m.size());
    for (std::size_t k = 0; k < len; ++k) {
        const int lm = k < lhs.m.size() ? lhs.m[k] : 0;
        const int rm = k < rhs.m.size() ? rhs.m[k] : 0;
        if (lm != rm) return lm > rm;
    }
    for (std::size_t k = 0; k < len; ++k) {
        const int ln = k < lhs.n.size() ? lhs.n[k] : 0;
        const int rn = k < rhs.n.size() ? rhs.n[k] : 0;
        if (ln != rn) return ln > rn;
    }
    return false;
}

double chaos_norm_squared(const ChaosIndex& idx) {
    return hermite_product_squared_norm(idx.m, idx.n);
}

Polynomial basis_polynomial(const ChaosIndex& idx, int n_vars) {
    if (idx.support() > n_vars) {
        throw std::invalid_argument("chaos index support exceeds n_vars");
    }
    return hermite_product(idx.m, idx.n, n_vars, /*normalized=*/true);
}

ChaosExpansion::ChaosExpansion(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 1) throw std::invalid_argument("n_vars must be positive");
}

Complex ChaosExpansion::raw_coefficient(const ChaosIndex& idx) const {
    auto it = raw_.find(idx);
    return it == raw_.end() ? Complex(0.0, 0.0) : it->second;
}

Complex ChaosExpansion::coefficient(const ChaosIndex& idx) const {
    return raw_coefficient(idx) * std::sqrt(chaos_norm_squared(idx));
}

void ChaosExpansion::set_raw_coefficient(const ChaosIndex& idx, Complex value) {
    if (idx.support() > n_vars_) throw std::invalid_argument("chaos index support exceeds n_vars");
    if (value == Complex(0.0, 0.0)) {
        raw_.erase(idx);
    } else {
        raw_[idx] = value;
    }
}

double ChaosExpansion::parseval_sum() const {
    double acc = 0.0;
    for (const auto& [idx, u] : raw_) {
        acc += (u.real() * u.real() + u.imag() * u.imag()) * chaos_norm_squared(idx);
    }
    return acc;
}

namespace {

void enumerate_rec(int n_vars, int max_total, std::vector<int>& m, std::vector<int>& n,
                   int pos, int used, std::vector<ChaosIndex>& out) {
    if (pos == n_vars) {
        out.push_back(ChaosIndex::of(m, n));
        return;
    }
    for (int em = 0; em + used <= max_total; ++em) {
        for (int en = 0; em + en + used <= max_total; ++en) {
            m[pos] = em;
            n[pos] = en;
            enumerate_rec(n_vars, max_total, m, n, pos + 1, used + em + en, out);
        }
    }
    m[pos] = 0;
    n[pos] = 0;
}

}  // namespace

std::vector<ChaosIndex> enumerate_chaos_indices(int n_vars, int max_total) {
    std::vector<int> m(n_vars, 0), n(n_vars, 0);
    std::vector<ChaosIndex> out;
    enumerate_rec(n_vars, max_total, m, n, 0, 0, out);
    std::sort(out.begin(), out.end(), [](const ChaosIndex& a, const ChaosIndex& b) {
        return ChaosIndexLess{}(a, b);
    });
    return out;
}

ChaosExpansion expand(const Polynomial& f) {
    const GaussianMeasure mu{f.n_vars()};
    ChaosExpansion e(f.n_vars());
    for (const ChaosIndex& idx : enumerate_chaos_indices(f.n_vars(), f.degree())) {
        const Polynomial basis = hermite_product(idx.m, idx.n, f.n_vars(), /*normalized=*/false);
        const Complex inner = mu.inner_product(f, basis);
        if (inner == Complex(0.0, 0.0)) continue;
        e.set_raw_coefficient(idx, inner / chaos_norm_squared(idx));
    }
    return e;
}

Polynomial reconstruct(const ChaosExpansion& e) {
    Polynomial out(e.n_vars());
    for (const auto& [idx, u] : e.raw_terms()) {
        out += hermite_product(idx.m, idx.n, e.n_vars(), /*normalized=*/false).scaled(u);
    }
    return out;
}

Polynomial project(const Polynomial& f, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("chaos bidegree must be nonnegative");
    Polynomial out(f.n_vars());
    if (m + n > f.degree()) return out;
    const ChaosExpansion e = expand(f);
    for (const auto& [idx, u] : e.raw_terms()) {
        if (idx.total_m() == m && idx.total_n() == n) {
            out += hermite_product(idx.m, idx.n, f.n_vars(), /*normalized=*/false).scaled(u);
        }
    }
    return out;
}

}  // namespace ouc
