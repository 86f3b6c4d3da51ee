#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "anho/series.hpp"

using namespace anho;

namespace {

CoefficientSeries y0_series(int order) {
    CoefficientSeries s = CoefficientSeries::zero(order);
    s.set_term(1, BetaPolynomial(1.0));
    return s;
}

// random series with zero constant term and modest coefficients
CoefficientSeries random_small(std::mt19937& rng, int order) {
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    CoefficientSeries s = CoefficientSeries::zero(order);
    for (int n = 1; n <= order; ++n) {
        std::vector<double> c(static_cast<std::size_t>(std::min(n, 4)));
        for (double& v : c) v = u(rng);
        s.set_term(n, BetaPolynomial::from_coefficients(std::move(c)));
    }
    return s;
}

void check_close(const CoefficientSeries& a, const CoefficientSeries& b, double tol) {
    REQUIRE(a.order() == b.order());
    CHECK(std::fabs(a.constant_term() - b.constant_term()) <=
          tol * std::max(1.0, std::fabs(a.constant_term())));
    for (int n = 1; n <= a.order(); ++n) {
        const int deg = std::max(a.term(n).degree(), b.term(n).degree());
        for (int k = 0; k <= deg; ++k) {
            const double x = a.term(n).coefficient(k);
            const double y = b.term(n).coefficient(k);
            CHECK(std::fabs(x - y) <= tol * std::max(1.0, std::max(std::fabs(x), std::fabs(y))));
        }
    }
}

} // namespace

TEST_CASE("addition: cancellation, identity, disjoint orders") {
    const int N = 4;
    CoefficientSeries one_plus = y0_series(N);
    one_plus.set_constant_term(1.0);
    CoefficientSeries one_minus = series_scale(y0_series(N), -1.0);
    one_minus.set_constant_term(1.0);
    const CoefficientSeries sum = series_add(one_plus, one_minus);
    CHECK(sum.constant_term() == 2.0);
    for (int n = 1; n <= N; ++n) CHECK(sum.term(n).is_zero());

    std::mt19937 rng(11);
    const CoefficientSeries a = random_small(rng, N);
    check_close(series_add(CoefficientSeries::zero(N), a), a, 0.0);

    CoefficientSeries beta_y0 = CoefficientSeries::zero(N);
    beta_y0.set_term(1, BetaPolynomial::from_coefficients({0.0, 1.0}));
    CoefficientSeries y0_sq = CoefficientSeries::zero(N);
    y0_sq.set_term(2, BetaPolynomial(1.0));
    const CoefficientSeries s = series_add(beta_y0, y0_sq);
    CHECK(s.term(1).coefficient(1) == 1.0);
    CHECK(s.term(1).coefficient(0) == 0.0);
    CHECK(s.term(2).coefficient(0) == 1.0);
}

TEST_CASE("addition rejects mismatched truncation orders") {
    CHECK_THROWS_AS(series_add(CoefficientSeries::zero(3), CoefficientSeries::zero(4)),
                    std::invalid_argument);
}

TEST_CASE("multiplication: conjugates, geometric telescoping, beta factors") {
    const int N = 6;
    CoefficientSeries one_plus = y0_series(N);
    one_plus.set_constant_term(1.0);
    CoefficientSeries one_minus = series_scale(y0_series(N), -1.0);
    one_minus.set_constant_term(1.0);
    const CoefficientSeries prod = series_mul(one_plus, one_minus);
    CHECK(prod.constant_term() == 1.0);
    CHECK(prod.term(1).is_zero());
    CHECK(prod.term(2).coefficient(0) == -1.0);
    for (int n = 3; n <= N; ++n) CHECK(prod.term(n).is_zero());

    CoefficientSeries geom(N, 1.0);
    for (int n = 1; n <= N; ++n) geom.set_term(n, BetaPolynomial(1.0));
    const CoefficientSeries tele = series_mul(geom, one_minus);
    CHECK(tele.constant_term() == 1.0);
    for (int n = 1; n <= N; ++n) CHECK(tele.term(n).is_zero());

    CoefficientSeries beta_y0 = CoefficientSeries::zero(N);
    beta_y0.set_term(1, BetaPolynomial::from_coefficients({0.0, 1.0}));
    const CoefficientSeries sq = series_mul(beta_y0, beta_y0);
    CHECK(sq.term(2).coefficient(2) == 1.0);
    CHECK(sq.term(2).coefficient(0) == 0.0);
    CHECK(sq.term(1).is_zero());
}

TEST_CASE("exponential: factorial tail, identity, Taylor with beta") {
    const int N = 6;
    const CoefficientSeries e = series_exp(y0_series(N));
    CHECK(e.constant_term() == 1.0);
    double fact = 1.0;
    for (int n = 1; n <= N; ++n) {
        fact *= n;
        CHECK(e.term(n).coefficient(0) == doctest::Approx(1.0 / fact).epsilon(1e-14));
    }

    const CoefficientSeries id = series_exp(CoefficientSeries::zero(N));
    CHECK(id.constant_term() == 1.0);
    for (int n = 1; n <= N; ++n) CHECK(id.term(n).is_zero());

    const double w1 = 0.7345;
    CoefficientSeries a = CoefficientSeries::zero(2);
    a.set_term(1, BetaPolynomial::from_coefficients({0.0, -w1}));
    const CoefficientSeries t = series_exp(a);
    CHECK(t.term(1).coefficient(1) == doctest::Approx(-w1).epsilon(1e-15));
    CHECK(t.term(2).coefficient(2) == doctest::Approx(0.5 * w1 * w1).epsilon(1e-15));
    CHECK(extract_coefficient(t, 2, 2) == doctest::Approx(0.5 * w1 * w1).epsilon(1e-15));

    CoefficientSeries bad = CoefficientSeries::one(3);
    CHECK_THROWS_AS(series_exp(bad), std::invalid_argument);
}

TEST_CASE("log1p, reciprocal, fractional power") {
    const int N = 5;
    const CoefficientSeries l = series_log1p(y0_series(N));
    CHECK(l.term(1).coefficient(0) == doctest::Approx(1.0));
    CHECK(l.term(2).coefficient(0) == doctest::Approx(-0.5));
    CHECK(l.term(3).coefficient(0) == doctest::Approx(1.0 / 3.0));

    CoefficientSeries one_minus = series_scale(y0_series(N), -1.0);
    one_minus.set_constant_term(1.0);
    const CoefficientSeries r = series_recip(one_minus);
    for (int n = 1; n <= N; ++n) CHECK(r.term(n).coefficient(0) == doctest::Approx(1.0));

    CHECK_THROWS_AS(series_recip(CoefficientSeries::zero(N)), std::invalid_argument);

    // binomial coefficients of the square root
    const CoefficientSeries h = series_pow(y0_series(N), 0.5);
    CHECK(h.term(1).coefficient(0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(h.term(2).coefficient(0) == doctest::Approx(-0.125).epsilon(1e-15));
    double num = 1.0, f = 1.0;
    for (int n = 1; n <= N; ++n) {
        num *= 0.5 - (n - 1);
        f *= n;
        CHECK(h.term(n).coefficient(0) == doctest::Approx(num / f).epsilon(1e-13));
    }
}

TEST_CASE("coefficient extraction and range checks") {
    CoefficientSeries s = CoefficientSeries::one(3);
    s.set_term(2, BetaPolynomial::from_coefficients({5.0, -4.0}));
    CHECK(extract_coefficient(s, 2, 1) == -4.0);
    CHECK(extract_coefficient(s, 0, 0) == 1.0);
    CHECK(extract_coefficient(s, 2, 7) == 0.0);
    CHECK_THROWS_AS(extract_coefficient(s, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(extract_coefficient(s, 0, 1), std::invalid_argument);
}

TEST_CASE("round-trip properties on random small series") {
    std::mt19937 rng(20240201);
    const int N = 8;
    for (int rep = 0; rep < 25; ++rep) {
        const CoefficientSeries a = random_small(rng, N);

        // exp(log1p(a)) == 1 + a
        CoefficientSeries one_plus_a = a;
        one_plus_a.set_constant_term(1.0);
        check_close(series_exp(series_log1p(a)), one_plus_a, 1e-12);

        // log1p(exp(a) - 1) == a
        CoefficientSeries em1 = series_exp(a);
        em1.set_constant_term(0.0);
        check_close(series_log1p(em1), a, 1e-12);

        // sqrt squared
        const CoefficientSeries h = series_pow(a, 0.5);
        check_close(series_mul(h, h), one_plus_a, 1e-12);

        // commutativity / associativity
        const CoefficientSeries b = random_small(rng, N);
        const CoefficientSeries c = random_small(rng, N);
        check_close(series_mul(a, b), series_mul(b, a), 1e-12);
        check_close(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c)), 1e-12);
    }
}

TEST_CASE("shift moves orders and respects truncation") {
    const int N = 4;
    CoefficientSeries s = CoefficientSeries::one(N);
    s.set_term(1, BetaPolynomial(2.0));
    s.set_term(4, BetaPolynomial(9.0));
    const CoefficientSeries sh = series_shift(s, 2);
    CHECK(sh.constant_term() == 0.0);
    CHECK(sh.term(2).coefficient(0) == 1.0); // old constant
    CHECK(sh.term(3).coefficient(0) == 2.0);
    CHECK(sh.term(4).is_zero()); // nothing lands here; order-4 term fell off
}
