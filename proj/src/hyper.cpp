#include "ouc/hyper.hpp"

#include <cmath>
#include <stdexcept>

#include "ouc/chaos.hpp"
#include "ouc/hermite.hpp"
#include "ouc/quadrature.hpp"
#include "ouc/rng.hpp"
#include "ouc/semigroup.hpp"

namespace ouc {

namespace {

// Flattened expansion for fast pointwise evaluation: per index a list of
// (coordinate, m, n) factors plus the raw coefficient.
struct FlatExpansion {
    struct Factor {
        int var;
        int m;
        int n;
    };
    struct Entry {
        Complex raw;
        int total_m;
        int total_n;
        std::vector<Factor> factors;
    };
    int n_vars = 0;
    int max_m = 0;
    int max_n = 0;
    std::vector<Entry> entries;
};

FlatExpansion flatten(const Polynomial& f) {
    FlatExpansion flat;
    flat.n_vars = f.n_vars();
    const ChaosExpansion e = expand(f);
    for (const auto& [idx, u] : e.raw_terms()) {
        FlatExpansion::Entry entry;
        entry.raw = u;
        entry.total_m = idx.total_m();
        entry.total_n = idx.total_n();
        for (int k = 0; k < idx.support(); ++k) {
            if (idx.m[k] == 0 && idx.n[k] == 0) continue;
            entry.factors.push_back({k, idx.m[k], idx.n[k]});
            flat.max_m = std::max(flat.max_m, idx.m[k]);
            flat.max_n = std::max(flat.max_n, idx.n[k]);
        }
        flat.entries.push_back(std::move(entry));
    }
    return flat;
}

// Mean and sample variance in one pass.
struct Welford {
    double mean = 0.0;
    double m2 = 0.0;
    long count = 0;

    void add(double y) {
        ++count;
        const double delta = y - mean;
        mean += delta / count;
        m2 += delta * (y - mean);
    }
    double variance() const { return count > 1 ? m2 / (count - 1) : 0.0; }
};

NormEstimate norm_from_abs(const std::vector<double>& abs_values, double p) {
    Welford w;
    for (double v : abs_values) w.add(v > 0.0 ? std::exp(p * std::log(v)) : 0.0);
    if (w.mean <= 0.0) return {0.0, 0.0};
    const double value = std::pow(w.mean, 1.0 / p);
    const double se_mean = std::sqrt(w.variance() / w.count);
    return {value, value * se_mean / (p * w.mean)};
}

// Evaluates several expansions over one sample batch in a single pass; the
// per-sample Hermite value tables are shared across the group.
void eval_group(const std::vector<const FlatExpansion*>& flats,
                const std::vector<const std::vector<Complex>*>& multipliers,
                const std::vector<std::vector<Complex>>& points,
                std::vector<std::vector<double>>& abs_f,
                std::vector<std::vector<double>>& abs_tf) {
    const std::size_t group = flats.size();
    int n_vars = 0, max_m = 0, max_n = 0;
    std::vector<std::vector<Complex>> weighted(group);
    for (std::size_t g = 0; g < group; ++g) {
        n_vars = std::max(n_vars, flats[g]->n_vars);
        max_m = std::max(max_m, flats[g]->max_m);
        max_n = std::max(max_n, flats[g]->max_n);
        weighted[g].resize(flats[g]->entries.size());
        for (std::size_t i = 0; i < flats[g]->entries.size(); ++i) {
            weighted[g][i] = flats[g]->entries[i].raw * (*multipliers[g])[i];
        }
    }
    abs_f.assign(group, std::vector<double>(points.size()));
    abs_tf.assign(group, std::vector<double>(points.size()));
    const int cols = max_n + 1;
    std::vector<std::vector<Complex>> tables(n_vars);
    for (std::size_t s = 0; s < points.size(); ++s) {
        for (int j = 0; j < n_vars; ++j) {
            hermite_eval_table_into(points[s][j], max_m, max_n, tables[j]);
        }
        for (std::size_t g = 0; g < group; ++g) {
            Complex fv(0.0, 0.0), tv(0.0, 0.0);
            const auto& entries = flats[g]->entries;
            for (std::size_t i = 0; i < entries.size(); ++i) {
                Complex prod(1.0, 0.0);
                for (const auto& factor : entries[i].factors) {
                    prod *= tables[factor.var][static_cast<std::size_t>(factor.m) * cols + factor.n];
                }
                fv += entries[i].raw * prod;
                tv += weighted[g][i] * prod;
            }
            abs_f[g][s] = std::abs(fv);
            abs_tf[g][s] = std::abs(tv);
        }
    }
}

void eval_batch(const FlatExpansion& flat, const std::vector<Complex>& multipliers,
                const std::vector<std::vector<Complex>>& points,
                std::vector<double>& abs_f, std::vector<double>& abs_tf) {
    std::vector<std::vector<double>> gf, gtf;
    eval_group({&flat}, {&multipliers}, points, gf, gtf);
    abs_f = std::move(gf[0]);
    abs_tf = std::move(gtf[0]);
}

std::vector<Complex> multipliers_for(const FlatExpansion& flat, double t,
                                     const RotationParams& params) {
    std::vector<Complex> out(flat.entries.size());
    for (std::size_t i = 0; i < flat.entries.size(); ++i) {
        out[i] = semigroup_multiplier(flat.entries[i].total_m, flat.entries[i].total_n, t, params);
    }
    return out;
}

HyperReport report_from_abs(const std::vector<double>& abs_f, const std::vector<double>& abs_tf,
                            double p, double q) {
    HyperReport rep;
    rep.p = p;
    rep.q = q;
    const NormEstimate lhs = norm_from_abs(abs_tf, q);
    const NormEstimate rhs = norm_from_abs(abs_f, p);
    rep.lhs = lhs.value;
    rep.lhs_se = lhs.std_error;
    rep.rhs = rhs.value;
    rep.rhs_se = rhs.std_error;
    rep.margin = rhs.value - lhs.value;
    rep.margin_se = std::sqrt(lhs.std_error * lhs.std_error + rhs.std_error * rhs.std_error);
    // Four standard errors plus an absolute floor for deterministic roundoff;
    // the floor is what decides degenerate inputs with zero sampling variance
    // (almost-surely-constant |f|), where the two power means differ by ulps.
    rep.pass = rep.margin >= -(4.0 * rep.margin_se + 1e-12 * (1.0 + rep.rhs));
    return rep;
}

}  // namespace

double q_exponent(double p, double t, const RotationParams& params, QVariant variant) {
    if (!(p > 1.0)) throw std::invalid_argument("p must exceed 1");
    if (t < 0.0 || std::isnan(t)) throw std::invalid_argument("time must be nonnegative");
    switch (variant) {
        case QVariant::Statement:
            return std::exp(2.0 * t) * (p - 1.0) + 1.0;
        case QVariant::Proof:
            return 1.0 + (p - 1.0) * std::exp(2.0 * t * params.cos_theta());
    }
    throw std::logic_error("unreachable variant");
}

NormEstimate lp_norm(const Polynomial& f, double p, const LpEstimator& estimator) {
    if (!(p >= 1.0)) throw std::invalid_argument("p must be at least 1");
    switch (estimator.mode) {
        case LpEstimator::Mode::Quadrature: {
            const long rounded = std::lround(p);
            if (std::abs(p - rounded) > 0.0 || rounded % 2 != 0) {
                throw std::invalid_argument("quadrature backend needs an even integer p");
            }
            // |f|^p = (f conj(f))^(p/2) is a polynomial; integrate it exactly.
            const Polynomial abs2 = f * f.conjugate();
            const Complex integral = quadrature_mean(poly_pow(abs2, static_cast<int>(rounded / 2)),
                                                     estimator.grid_size);
            return {std::pow(integral.real(), 1.0 / p), 0.0};
        }
        case LpEstimator::Mode::MonteCarlo: {
            if (estimator.n_samples < 2) throw std::invalid_argument("Monte Carlo needs n_samples >= 2");
            Rng rng(estimator.seed);
            std::vector<double> abs_values(static_cast<std::size_t>(estimator.n_samples));
            for (auto& v : abs_values) {
                const auto point = gaussian_vector(f.n_vars(), rng);
                v = std::abs(f.eval(point));
            }
            return norm_from_abs(abs_values, p);
        }
    }
    throw std::logic_error("unreachable estimator mode");
}

HyperReport hyper_check(const Polynomial& f, double p, double t, const RotationParams& params,
                        QVariant variant, long n_samples, std::uint64_t seed) {
    if (n_samples < 2) throw std::invalid_argument("need n_samples >= 2");
    const double q = q_exponent(p, t, params, variant);
    const FlatExpansion flat = flatten(f);
    const auto mult = multipliers_for(flat, t, params);

    Rng rng(seed);
    std::vector<std::vector<Complex>> points(static_cast<std::size_t>(n_samples));
    for (auto& pt : points) pt = gaussian_vector(f.n_vars(), rng);

    std::vector<double> abs_f, abs_tf;
    eval_batch(flat, mult, points, abs_f, abs_tf);
    HyperReport rep = report_from_abs(abs_f, abs_tf, p, q);
    rep.t = t;
    rep.theta = params.theta();
    rep.variant = variant;
    return rep;
}

std::vector<HyperReport> hyper_scan(const HyperScanConfig& config) {
    if (config.p_grid.empty() || config.t_grid.empty() || config.theta_grid.empty()) {
        throw std::invalid_argument("scan grids must be nonempty");
    }
    if (config.polys_per_cell < 1 || config.n_samples < 2) {
        throw std::invalid_argument("need polys_per_cell >= 1 and n_samples >= 2");
    }

    // One shared sample batch for the whole scan.
    Rng rng(config.seed);
    std::vector<std::vector<Complex>> points(static_cast<std::size_t>(config.n_samples));
    for (auto& pt : points) pt = gaussian_vector(config.dim, rng);

    std::vector<HyperReport> rows;
    for (std::size_t it = 0; it < config.theta_grid.size(); ++it) {
        const RotationParams params(config.theta_grid[it]);
        for (std::size_t jt = 0; jt < config.t_grid.size(); ++jt) {
            const double t = config.t_grid[jt];
            // Cell polynomials come from streams keyed by the cell, and the
            // whole cell is evaluated in one pass over the shared batch.
            std::vector<FlatExpansion> flats;
            std::vector<std::vector<Complex>> mults;
            flats.reserve(config.polys_per_cell);
            for (int k = 0; k < config.polys_per_cell; ++k) {
                Rng poly_rng = Rng(config.seed).fork(1000003ULL * it + 1009ULL * jt + k);
                flats.push_back(flatten(
                    random_gaussian_integer_polynomial(config.dim, config.degree, 3, poly_rng)));
                mults.push_back(multipliers_for(flats.back(), t, params));
            }
            std::vector<const FlatExpansion*> flat_ptrs;
            std::vector<const std::vector<Complex>*> mult_ptrs;
            for (int k = 0; k < config.polys_per_cell; ++k) {
                flat_ptrs.push_back(&flats[k]);
                mult_ptrs.push_back(&mults[k]);
            }
            std::vector<std::vector<double>> abs_f, abs_tf;
            eval_group(flat_ptrs, mult_ptrs, points, abs_f, abs_tf);

            // worst row per p across the cell polynomials
            std::vector<HyperReport> best(config.p_grid.size());
            std::vector<bool> filled(config.p_grid.size(), false);
            for (int k = 0; k < config.polys_per_cell; ++k) {
                for (std::size_t ip = 0; ip < config.p_grid.size(); ++ip) {
                    const double p = config.p_grid[ip];
                    const double q = q_exponent(p, t, params, config.variant);
                    HyperReport rep = report_from_abs(abs_f[k], abs_tf[k], p, q);
                    rep.t = t;
                    rep.theta = params.theta();
                    rep.variant = config.variant;
                    const double score = rep.margin_se > 0.0 ? rep.margin / rep.margin_se : rep.margin;
                    const double best_score = best[ip].margin_se > 0.0
                                                  ? best[ip].margin / best[ip].margin_se
                                                  : best[ip].margin;
                    if (!filled[ip] || score < best_score) {
                        best[ip] = rep;
                        filled[ip] = true;
                    }
                }
            }
            for (const auto& rep : best) rows.push_back(rep);
        }
    }
    return rows;
}

}  // namespace ouc
