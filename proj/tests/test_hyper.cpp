#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ouc/hermite.hpp"
#include "ouc/hyper.hpp"
#include "ouc/polynomial.hpp"
#include "ouc/rng.hpp"
#include "ouc/rotation.hpp"

using ouc::Complex;
using ouc::LpEstimator;
using ouc::Polynomial;
using ouc::QVariant;
using ouc::RotationParams;

TEST_CASE("exponent growth laws") {
    const RotationParams params(std::numbers::pi / 3);
    CHECK(ouc::q_exponent(2.0, 0.0, params, QVariant::Statement) == 2.0);
    CHECK(ouc::q_exponent(2.0, 0.0, params, QVariant::Proof) == 2.0);
    CHECK(ouc::q_exponent(2.0, 1.0, params, QVariant::Statement) ==
          doctest::Approx(std::exp(2.0) + 1.0).epsilon(1e-15));
    // cos(pi/3) = 1/2, so the proof exponent is 1 + e
    CHECK(ouc::q_exponent(2.0, 1.0, params, QVariant::Proof) ==
          doctest::Approx(1.0 + std::numbers::e).epsilon(1e-14));
    CHECK_THROWS_AS(ouc::q_exponent(1.0, 1.0, params, QVariant::Proof), std::invalid_argument);
    CHECK_THROWS_AS(ouc::q_exponent(2.0, -1.0, params, QVariant::Proof), std::invalid_argument);
}

TEST_CASE("statement exponent dominates the proof exponent") {
    for (double theta : {0.0, 0.4, -0.9, 1.3}) {
        const RotationParams params(theta);
        for (double t : {0.0, 0.2, 1.0, 2.0}) {
            for (double p : {1.5, 2.0, 3.0}) {
                const double qs = ouc::q_exponent(p, t, params, QVariant::Statement);
                const double qp = ouc::q_exponent(p, t, params, QVariant::Proof);
                CHECK(qs >= qp - 1e-14);
                if (theta == 0.0 || t == 0.0) {
                    CHECK(qs == doctest::Approx(qp).epsilon(1e-14));
                } else {
                    CHECK(qs > qp);
                }
            }
        }
    }
}

TEST_CASE("norm fixtures") {
    const Polynomial one = Polynomial::constant(1, Complex(1, 0));
    const Polynomial z = Polynomial::variable(1, 1);

    CHECK(ouc::lp_norm(one, 3.7, LpEstimator::monte_carlo(1000, 5)).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ouc::lp_norm(one, 2.0, LpEstimator::quadrature(4)).value ==
          doctest::Approx(1.0).epsilon(1e-12));

    CHECK(ouc::lp_norm(z, 2.0, LpEstimator::quadrature(4)).value ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(ouc::lp_norm(z, 4.0, LpEstimator::quadrature(5)).value ==
          doctest::Approx(std::pow(8.0, 0.25)).epsilon(1e-12));

    const auto mc = ouc::lp_norm(z, 2.0, LpEstimator::monte_carlo(100000, 6));
    CHECK(std::abs(mc.value - std::sqrt(2.0)) <= 3.0 * mc.std_error);

    CHECK_THROWS_AS(ouc::lp_norm(z, 3.0, LpEstimator::quadrature(6)), std::invalid_argument);
    CHECK_THROWS_AS(ouc::lp_norm(z, 0.5, LpEstimator::monte_carlo(100, 1)), std::invalid_argument);
}

TEST_CASE("Monte Carlo error scales like 1/sqrt(N)") {
    const Polynomial f = ouc::hermite_polynomial(2, 1);
    const auto small = ouc::lp_norm(f, 3.0, LpEstimator::monte_carlo(20000, 9));
    const auto large = ouc::lp_norm(f, 3.0, LpEstimator::monte_carlo(80000, 9));
    const double ratio = small.std_error / large.std_error;
    CHECK(ratio > 1.6);
    CHECK(ratio < 2.4);
}

TEST_CASE("zero time gives an exactly tight inequality") {
    ouc::Rng rng(404);
    const RotationParams params(0.7);
    for (double p : {1.3, 2.0, 3.0}) {
        const Polynomial f = ouc::random_gaussian_integer_polynomial(2, 3, 3, rng);
        const auto rep = ouc::hyper_check(f, p, 0.0, params, QVariant::Proof, 20000, 31);
        CHECK(rep.q == p);
        CHECK(rep.margin == 0.0);
        CHECK(rep.pass);
    }
}

TEST_CASE("contractivity along a time grid") {
    const RotationParams params(0.9);
    const Polynomial f = ouc::hermite_polynomial(2, 1);
    for (double t : {0.1, 0.4, 0.8, 1.4, 2.0}) {
        for (QVariant variant : {QVariant::Proof, QVariant::Statement}) {
            const auto rep = ouc::hyper_check(f, 2.0, t, params, variant, 100000, 515);
            CHECK(rep.pass);
            CHECK(rep.margin >= 0.0);
        }
    }
}

TEST_CASE("margins shrink quadratically near constants") {
    // f = 1 + eps * z / sqrt(2): the classical near-extremal direction.
    const RotationParams params(0.5);
    const Polynomial unit = Polynomial::variable(1, 1).scaled(Complex(1.0 / std::sqrt(2.0), 0));
    double previous_ratio = -1.0;
    for (double eps : {0.4, 0.2, 0.1}) {
        const Polynomial f = Polynomial::constant(1, Complex(1, 0)) + unit.scaled(Complex(eps, 0));
        const auto rep = ouc::hyper_check(f, 2.0, 0.5, params, QVariant::Proof, 200000, 808);
        CHECK(rep.pass);
        const double relative = rep.margin / rep.rhs;
        if (previous_ratio > 0.0) {
            const double decay = previous_ratio / relative;
            CHECK(decay > 2.5);  // quadratic in eps would give 4
            CHECK(decay < 6.0);
        }
        previous_ratio = relative;
    }
}

TEST_CASE("scan over a small grid") {
    ouc::HyperScanConfig config;
    config.degree = 2;
    config.dim = 1;
    config.p_grid = {1.5, 2.0};
    config.t_grid = {0.0, 0.5};
    config.theta_grid = {0.0, 0.8};
    config.variant = QVariant::Proof;
    config.polys_per_cell = 4;
    config.n_samples = 20000;
    config.seed = 99;
    const auto rows = ouc::hyper_scan(config);
    CHECK(rows.size() == 2 * 2 * 2);
    for (const auto& row : rows) {
        CHECK(row.pass);
        if (row.t == 0.0) CHECK(row.margin == 0.0);
    }
    config.p_grid.clear();
    CHECK_THROWS_AS(ouc::hyper_scan(config), std::invalid_argument);
}
