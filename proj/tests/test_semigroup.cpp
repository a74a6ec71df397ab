#include <doctest.h>

#include <cmath>
#include <vector>

#include "ouc/chaos.hpp"
#include "ouc/hermite.hpp"
#include "ouc/measure.hpp"
#include "ouc/rng.hpp"
#include "ouc/semigroup.hpp"

using ouc::ChaosExpansion;
using ouc::ChaosIndex;
using ouc::Complex;
using ouc::Integrator;
using ouc::Polynomial;
using ouc::RotationParams;

TEST_CASE("multipliers") {
    const RotationParams params(0.8);
    CHECK(ouc::semigroup_multiplier(3, 1, 0.0, params) == Complex(1, 0));
    // equal bidegrees decay on the real axis
    const Complex m11 = ouc::semigroup_multiplier(1, 1, 0.7, params);
    CHECK(m11.imag() == 0.0);
    CHECK(m11.real() == doctest::Approx(std::exp(-2.0 * 0.7 * params.cos_theta())).epsilon(1e-14));
    // contraction
    for (int m = 0; m <= 4; ++m) {
        for (int n = 0; n <= 4; ++n) {
            CHECK(std::abs(ouc::semigroup_multiplier(m, n, 1.3, params)) <= 1.0);
        }
    }
    CHECK_THROWS_AS(ouc::semigroup_multiplier(1, 0, -0.5, params), std::invalid_argument);
}

TEST_CASE("spectral form: t = 0 is the identity") {
    ouc::Rng rng(81);
    const RotationParams params(0.9);
    const Polynomial f = ouc::random_gaussian_integer_polynomial(2, 4, 7, rng);
    const ChaosExpansion e = ouc::expand(f);
    const ChaosExpansion e0 = ouc::spectral_semigroup(e, 0.0, params);
    CHECK(ouc::reconstruct(e0) == f);
}

TEST_CASE("spectral form: first chaos picks up e^{-alpha t}") {
    const RotationParams params(0.6);
    const double t = 1.3;
    const ChaosExpansion e = ouc::expand(Polynomial::variable(1, 1));
    const ChaosExpansion et = ouc::spectral_semigroup(e, t, params);
    const Complex expected = std::exp(-params.alpha() * t) *
                             e.raw_coefficient(ChaosIndex::of({1}, {0}));
    CHECK(std::abs(et.raw_coefficient(ChaosIndex::of({1}, {0})) - expected) < 1e-15);
}

TEST_CASE("averaging form fixtures") {
    const RotationParams params(0.8);
    const double t = 0.9;
    const std::vector<Complex> x{Complex(1.2, -0.4)};

    SUBCASE("f = z contracts toward zero") {
        const auto value = ouc::mehler_apply(Polynomial::variable(1, 1), x, t, params,
                                             Integrator::exact_moment());
        const Complex expected = std::exp(-params.alpha() * t) * x[0];
        CHECK(std::abs(value.value - expected) < 1e-14);
    }
    SUBCASE("t = 0 evaluates the function") {
        const Polynomial f = ouc::hermite_polynomial(2, 1);
        const auto value = ouc::mehler_apply(f, x, 0.0, params, Integrator::exact_moment());
        CHECK(value.value == f.eval(x));
        CHECK(ouc::semigroup_polynomial(f, 0.0, params) == f);
    }
    SUBCASE("f = z zbar mixes decay with the stationary mean") {
        const Polynomial f = Polynomial::variable(1, 1) * Polynomial::conj_variable(1, 1);
        const auto value = ouc::mehler_apply(f, x, t, params, Integrator::exact_moment());
        const double decay = std::exp(-2.0 * t * params.cos_theta());
        const Complex expected = decay * (std::norm(x[0]) - 2.0) + 2.0;
        CHECK(std::abs(value.value - expected) < 1e-13);
    }
}

TEST_CASE("quadrature and Monte Carlo backends agree with the exact one") {
    ouc::Rng rng(83);
    const RotationParams params(-0.7);
    const double t = 0.6;
    const Polynomial f = ouc::random_gaussian_integer_polynomial(2, 4, 5, rng);
    const std::vector<Complex> x{Complex(0.5, 0.1), Complex(-0.3, 0.9)};
    const Complex exact = ouc::mehler_apply(f, x, t, params, Integrator::exact_moment()).value;

    const Complex quad = ouc::mehler_apply(f, x, t, params, Integrator::quadrature(8)).value;
    CHECK(std::abs(quad - exact) <= 1e-10 * (1.0 + std::abs(exact)));

    const auto mc = ouc::mehler_apply(f, x, t, params, Integrator::monte_carlo(100000, 4242));
    CHECK(std::abs(mc.value - exact) <= 3.0 * mc.std_error + 1e-12);
}

TEST_CASE("rejections") {
    const RotationParams params(0.2);
    const std::vector<Complex> x{Complex(0, 0)};
    const Polynomial z = Polynomial::variable(1, 1);
    CHECK_THROWS_AS(ouc::mehler_apply(z, x, -0.1, params, Integrator::exact_moment()),
                    std::invalid_argument);
    CHECK_THROWS_AS(ouc::mehler_apply(z, x, 1.0, params, Integrator::monte_carlo(0, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(ouc::mehler_apply(z, x, 1.0, params, Integrator::quadrature(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(ouc::spectral_semigroup(ouc::expand(z), -1.0, params), std::invalid_argument);
}

TEST_CASE("spectral and averaging routes agree") {
    ouc::Rng rng(89);
    for (int trial = 0; trial < 20; ++trial) {
        const int n_vars = 1 + static_cast<int>(rng.next_u64() % 3);
        const RotationParams params(-1.4 + 2.8 * rng.uniform01());
        const double t = 3.0 * rng.uniform01();
        const Polynomial f = ouc::random_gaussian_integer_polynomial(n_vars, 5, 7, rng);
        const auto x = ouc::gaussian_vector(n_vars, rng);
        const Complex spectral =
            ouc::reconstruct(ouc::spectral_semigroup(ouc::expand(f), t, params)).eval(x);
        const Complex averaged = ouc::mehler_apply(f, x, t, params, Integrator::exact_moment()).value;
        CHECK(std::abs(spectral - averaged) <= 1e-10 * (1.0 + std::abs(averaged)));
    }
}

TEST_CASE("semigroup law on the spectral side") {
    ouc::Rng rng(97);
    const RotationParams params(1.1);
    const Polynomial f = ouc::random_gaussian_integer_polynomial(2, 5, 7, rng);
    const ChaosExpansion e = ouc::expand(f);
    for (auto [s, t] : std::vector<std::pair<double, double>>{{0.2, 0.5}, {1.0, 1.7}, {0.0, 2.4}}) {
        const ChaosExpansion via_two = ouc::spectral_semigroup(ouc::spectral_semigroup(e, t, params), s, params);
        const ChaosExpansion direct = ouc::spectral_semigroup(e, s + t, params);
        for (const auto& [idx, u] : direct.raw_terms()) {
            CHECK(std::abs(via_two.raw_coefficient(idx) - u) <= 1e-14 * (1.0 + std::abs(u)));
        }
    }
}

TEST_CASE("L2 contraction via Parseval") {
    ouc::Rng rng(101);
    const RotationParams params(0.5);
    const Polynomial f = ouc::random_gaussian_integer_polynomial(2, 4, 7, rng);
    const ChaosExpansion e = ouc::expand(f);
    const double base = e.parseval_sum();
    double previous = base;
    for (double t : {0.0, 0.3, 1.0, 2.5}) {
        const double value = ouc::spectral_semigroup(e, t, params).parseval_sum();
        CHECK(value <= base * (1.0 + 1e-15));
        CHECK(value <= previous * (1.0 + 1e-15));
        previous = value;
    }
    // strict decay for nonconstant input at t > 0
    if (f.degree() > 0) {
        CHECK(ouc::spectral_semigroup(e, 0.7, params).parseval_sum() < base);
    }
    // constants are fixed points
    const ChaosExpansion c = ouc::expand(Polynomial::constant(1, Complex(3, -2)));
    CHECK(ouc::spectral_semigroup(c, 1.9, params).parseval_sum() == c.parseval_sum());
}

// The multiplier exponents conjugate under the (m, n) swap, so conjugation
// commutes with T_t at fixed rotation, and flipping the rotation is the
// L2-adjoint rather than a conjugation image.
TEST_CASE("conjugation symmetry and the adjoint role of the mirrored rotation") {
    ouc::Rng rng(103);
    const RotationParams params(0.8);
    const RotationParams mirrored = params.negated();
    const ouc::GaussianMeasure mu{2};
    const double t = 0.9;
    for (int trial = 0; trial < 10; ++trial) {
        const Polynomial f = ouc::random_gaussian_integer_polynomial(2, 4, 5, rng);
        const Polynomial lhs = ouc::semigroup_polynomial(f.conjugate(), t, params);
        const Polynomial rhs = ouc::semigroup_polynomial(f, t, params).conjugate();
        CHECK((lhs - rhs).max_abs_coefficient() <= 1e-13 * (1.0 + rhs.max_abs_coefficient()));

        const Polynomial g = ouc::random_gaussian_integer_polynomial(2, 4, 5, rng);
        const Complex forward = mu.inner_product(ouc::semigroup_polynomial(f, t, params), g);
        const Complex backward = mu.inner_product(f, ouc::semigroup_polynomial(g, t, mirrored));
        CHECK(std::abs(forward - backward) <= 1e-12 * (1.0 + std::abs(forward)));
    }
}

TEST_CASE("Chapman-Kolmogorov") {
    const RotationParams params(0.7);
    SUBCASE("eigenfunction fixture") {
        const std::vector<Complex> x{Complex(0.9, 0.4)};
        CHECK(ouc::chapman_kolmogorov_residual(Polynomial::variable(1, 1), x, 0.5, 0.5, params) <=
              1e-14);
    }
    SUBCASE("s = 0 degenerates") {
        const std::vector<Complex> x{Complex(-1.1, 0.2)};
        CHECK(ouc::chapman_kolmogorov_residual(ouc::hermite_polynomial(2, 1), x, 0.0, 0.8,
                                               params) <= 1e-14);
    }
    SUBCASE("random fixtures") {
        ouc::Rng rng(107);
        for (int trial = 0; trial < 20; ++trial) {
            const Polynomial f = ouc::random_gaussian_integer_polynomial(2, 4, 7, rng);
            const auto x = ouc::gaussian_vector(2, rng);
            const double s = 2.0 * rng.uniform01();
            const double t = 2.0 * rng.uniform01();
            CHECK(ouc::chapman_kolmogorov_residual(f, x, s, t, params) <= 1e-12);
        }
    }
}

TEST_CASE("stationary measure is invariant") {
    const RotationParams params(-0.9);
    SUBCASE("second moment") {
        const Polynomial f = Polynomial::variable(1, 1) * Polynomial::conj_variable(1, 1);
        const auto result = ouc::invariance_check(f, 1.2, params, Integrator::exact_moment());
        CHECK(result.direct_mean == Complex(2, 0));
        CHECK(std::abs(result.semigroup_mean - Complex(2, 0)) <= 1e-13);
        CHECK(result.residual <= 1e-12);
    }
    SUBCASE("constants") {
        const auto result = ouc::invariance_check(Polynomial::constant(1, Complex(1, 0)), 0.4,
                                                  params, Integrator::exact_moment());
        CHECK(result.residual == 0.0);
    }
    SUBCASE("positive chaos has zero mean") {
        const auto result = ouc::invariance_check(ouc::hermite_polynomial(2, 1), 0.9, params,
                                                  Integrator::exact_moment());
        CHECK(result.direct_mean == Complex(0, 0));
        CHECK(result.residual <= 1e-13);
    }
    SUBCASE("random polynomials, exact and Monte Carlo") {
        ouc::Rng rng(109);
        for (int trial = 0; trial < 10; ++trial) {
            const Polynomial f = ouc::random_gaussian_integer_polynomial(2, 4, 7, rng);
            const double t = 2.0 * rng.uniform01();
            CHECK(ouc::invariance_check(f, t, params, Integrator::exact_moment()).residual <=
                  1e-12);
        }
        const Polynomial f = ouc::random_gaussian_integer_polynomial(2, 3, 5, rng);
        const auto mc = ouc::invariance_check(f, 0.8, params, Integrator::monte_carlo(50000, 777));
        CHECK(mc.residual <= 3.0 * mc.std_error + 1e-12);
    }
}
