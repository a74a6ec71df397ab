#include <doctest.h>

#include "ouc/json_io.hpp"
#include "ouc/polynomial.hpp"
#include "ouc/rng.hpp"

using ouc::Complex;
using ouc::Polynomial;

namespace {

Polynomial z(int n_vars = 1, int j = 1) { return Polynomial::variable(n_vars, j); }
Polynomial zbar(int n_vars = 1, int j = 1) { return Polynomial::conj_variable(n_vars, j); }

}  // namespace

TEST_CASE("monomial product") {
    const Polynomial p = z() * zbar();
    CHECK(p.term_count() == 1);
    CHECK(p.coefficient({{1}, {1}}) == Complex(1, 0));
}

TEST_CASE("additive inverse cancels to the zero polynomial") {
    ouc::Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial p = ouc::random_gaussian_integer_polynomial(2, 5, 9, rng);
        CHECK((p + p.scaled(Complex(-1, 0))).is_zero());
    }
}

TEST_CASE("binomial expansion") {
    const Polynomial p = (z() + zbar()) * (z() + zbar());
    CHECK(p.coefficient({{2}, {0}}) == Complex(1, 0));
    CHECK(p.coefficient({{1}, {1}}) == Complex(2, 0));
    CHECK(p.coefficient({{0}, {2}}) == Complex(1, 0));
    CHECK(p.term_count() == 3);
}

TEST_CASE("mismatched n_vars is rejected") {
    CHECK_THROWS_AS(z(1) + z(2), std::invalid_argument);
    CHECK_THROWS_AS(z(1) * z(2), std::invalid_argument);
}

TEST_CASE("formal Wirtinger derivatives") {
    // d/dz (z^2 zbar) = 2 z zbar, d/dzbar (z^2 zbar) = z^2
    const Polynomial p = z() * z() * zbar();
    const Polynomial dp = ouc::dz(p, 1);
    CHECK(dp.coefficient({{1}, {1}}) == Complex(2, 0));
    CHECK(dp.term_count() == 1);
    const Polynomial dpbar = ouc::dzbar(p, 1);
    CHECK(dpbar.coefficient({{2}, {0}}) == Complex(1, 0));
    CHECK(dpbar.term_count() == 1);

    CHECK(ouc::dz(Polynomial::constant(1, Complex(3, 1)), 1).is_zero());
}

TEST_CASE("degree drops by one under differentiation") {
    ouc::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial p = ouc::random_gaussian_integer_polynomial(3, 6, 5, rng);
        const Polynomial dp = ouc::dz(p, 1);
        if (!dp.is_zero()) CHECK(dp.degree() < p.degree());
    }
}

TEST_CASE("evaluation") {
    SUBCASE("constant") {
        const Polynomial one = Polynomial::constant(2, Complex(1, 0));
        const std::vector<Complex> point{{2.5, -1.0}, {0.0, 3.0}};
        CHECK(one.eval(point) == Complex(1, 0));
    }
    SUBCASE("z^2 at 2i") {
        const Polynomial p = z() * z();
        const std::vector<Complex> point{{0.0, 2.0}};
        CHECK(p.eval(point) == Complex(-4, 0));
    }
    SUBCASE("conjugate variable uses the conjugate of the point") {
        const std::vector<Complex> point{{1.0, 1.0}};
        CHECK(zbar().eval(point) == Complex(1, -1));
    }
}

TEST_CASE("conjugate swaps exponents and conjugates coefficients") {
    ouc::Rng rng(23);
    const Polynomial p = ouc::random_gaussian_integer_polynomial(2, 5, 9, rng);
    CHECK(p.conjugate().conjugate() == p);
    const Polynomial q = z().scaled(Complex(0, 2));
    CHECK(q.conjugate().coefficient({{0}, {1}}) == Complex(0, -2));
}

TEST_CASE("graded-lex order drives serialization") {
    const Polynomial p = z(2, 2) + z(2, 1) + Polynomial::constant(2, Complex(5, 0)) +
                         z(2, 1) * z(2, 1);
    const std::string json = ouc::polynomial_to_json(p);
    // constant, then degree-1 terms (z1 before z2), then z1^2
    const auto pos_const = json.find("\"re\":5.0");
    const auto pos_z1 = json.find("\"a\":[1,0]");
    const auto pos_z2 = json.find("\"a\":[0,1]");
    const auto pos_z1sq = json.find("\"a\":[2,0]");
    REQUIRE(pos_const != std::string::npos);
    CHECK(pos_const < pos_z1);
    CHECK(pos_z1 < pos_z2);
    CHECK(pos_z2 < pos_z1sq);
}

TEST_CASE("JSON round trip is exact") {
    ouc::Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const Polynomial p = ouc::random_gaussian_integer_polynomial(3, 6, 9, rng);
        CHECK(ouc::polynomial_from_json(ouc::polynomial_to_json(p)) == p);
    }
    // float coefficients survive the shortest-round-trip dump too
    const Polynomial q = z().scaled(Complex(0.1, -3.7e-13));
    CHECK(ouc::polynomial_from_json(ouc::polynomial_to_json(q)) == q);
}

TEST_CASE("JSON parse failures throw") {
    CHECK_THROWS_AS(ouc::polynomial_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(ouc::polynomial_from_json("{\"n_vars\":1}"), std::invalid_argument);
    CHECK_THROWS_AS(
        ouc::polynomial_from_json(
            "{\"n_vars\":1,\"terms\":[{\"a\":[-1],\"b\":[0],\"re\":1.0,\"im\":0.0}]}"),
        std::invalid_argument);
}

TEST_CASE("canonical form stores no zero coefficients") {
    Polynomial p(1);
    p.set_coefficient({{1}, {0}}, Complex(0, 0));
    CHECK(p.is_zero());
    p.add_to_coefficient({{1}, {0}}, Complex(2, 0));
    p.add_to_coefficient({{1}, {0}}, Complex(-2, 0));
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
}
