#include "ouc/measure.hpp"

#include <array>
#include <stdexcept>

namespace ouc {

namespace {

// moment_table[a] = 2^a * a!, built by the recurrence M(a) = 2a * M(a-1).
constexpr int kMaxMoment = 160;

const std::array<double, kMaxMoment + 1>& moment_table() {
    static const auto table = [] {
        std::array<double, kMaxMoment + 1> t{};
        t[0] = 1.0;
        for (int a = 1; a <= kMaxMoment; ++a) t[a] = 2.0 * a * t[a - 1];
        return t;
    }();
    return table;
}

void require_same_vars(const GaussianMeasure& mu, const Polynomial& p) {
    if (mu.n_vars != p.n_vars()) {
        throw std::invalid_argument("measure and polynomial have different n_vars");
    }
}

}  // namespace

double GaussianMeasure::coordinate_moment(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative moment order");
    if (a != b) return 0.0;
    if (a > kMaxMoment) throw std::invalid_argument("moment order too large");
    return moment_table()[a];
}

Complex GaussianMeasure::mean(const Polynomial& p) const {
    require_same_vars(*this, p);
    Complex acc(0.0, 0.0);
    for (const auto& [key, c] : p.terms()) {
        double weight = 1.0;
        bool matched = true;
        for (int j = 0; j < n_vars && matched; ++j) {
            if (key.a[j] != key.b[j]) {
                matched = false;
            } else {
                weight *= moment_table()[key.a[j]];
            }
        }
        if (matched) acc += c * weight;
    }
    return acc;
}

Complex GaussianMeasure::inner_product(const Polynomial& p, const Polynomial& q) const {
    require_same_vars(*this, p);
    require_same_vars(*this, q);
    Complex acc(0.0, 0.0);
    for (const auto& [kp, cp] : p.terms()) {
        for (const auto& [kq, cq] : q.terms()) {
            // The product p * conj(q) has exponents (a_p + b_q, b_p + a_q);
            // the moment survives iff a_p - b_p == a_q - b_q per coordinate.
            double weight = 1.0;
            bool matched = true;
            for (int j = 0; j < n_vars && matched; ++j) {
                const int a = kp.a[j] + kq.b[j];
                const int b = kp.b[j] + kq.a[j];
                if (a != b) {
                    matched = false;
                } else {
                    weight *= moment_table()[a];
                }
            }
            if (matched) acc += cp * std::conj(cq) * weight;
        }
    }
    return acc;
}

}  // namespace ouc
