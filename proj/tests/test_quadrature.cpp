#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <random>

#include "anho/quadrature.hpp"

using namespace anho;

namespace {

// independent high-order adaptive integrator for oracle values
double oracle_moment(int m, double x, int k) {
    boost::math::quadrature::exp_sinh<double> integrator;
    auto f = [=](double y) { return std::pow(y, k) * std::exp(-y * y - x * std::pow(y, 2 * m)); };
    return 2.0 * integrator.integrate(f, 1e-15);
}

} // namespace

TEST_CASE("moments at x = 0 are Gamma((k+1)/2)") {
    CHECK(moment(2, 0.0, 0) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
    CHECK(moment(2, 0.0, 2) == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-13));
    for (int m : {2, 3, 4})
        for (int k = 0; k <= 12; k += 2)
            CHECK(moment(m, 0.0, k) == doctest::Approx(std::tgamma(0.5 * (k + 1))).epsilon(1e-12));
}

TEST_CASE("moment(2,1,0) against an independent adaptive integrator") {
    const double ref = oracle_moment(2, 1.0, 0);
    CHECK(moment(2, 1.0, 0) == doctest::Approx(ref).epsilon(1e-13));
    // value frozen from the oracle
    CHECK(moment(2, 1.0, 0) == doctest::Approx(1.3684268557355088).epsilon(1e-12));
}

TEST_CASE("negative x is a domain error") {
    CHECK_THROWS_AS(moment(2, -0.25, 0), std::domain_error);
}

TEST_CASE("B(0) = 1 for every m") {
    for (int m : {2, 3, 4}) CHECK(big_b(m, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("B grows like x^{1/m} with the Gamma-ratio constant") {
    // exponent from a log-log fit over [1e3, 1e6]
    const double xs[4] = {1e3, 1e4, 1e5, 1e6};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double x : xs) {
        const double lx = std::log(x), ly = std::log(big_b(2, x));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
    CHECK(slope == doctest::Approx(0.5).epsilon(1e-2));
    CHECK(std::fabs(slope - 0.5) < 5e-3);
    // limit constant Gamma(1/4)/(2 Gamma(3/4))
    const double c = std::tgamma(0.25) / (2.0 * std::tgamma(0.75));
    CHECK(big_b(2, 1e6) / std::sqrt(1e6) == doctest::Approx(c).epsilon(5e-3));
}

TEST_CASE("two quadrature schemes agree at the crossover") {
    const double a = moment_gauss_hermite(3, 1.0, 0) / (2.0 * moment_gauss_hermite(3, 1.0, 2));
    const double b = moment_adaptive(3, 1.0, 0) / (2.0 * moment_adaptive(3, 1.0, 2));
    CHECK(a == doctest::Approx(b).epsilon(1e-11));
    CHECK(big_b(3, 1.0) == doctest::Approx(2.13503917884794).epsilon(1e-11));
}

TEST_CASE("B-derivatives from the moment recursion") {
    // m = 2, x0 = 0: B' = 3 from the Gaussian moments
    const std::vector<double> b0 = big_b_derivatives(2, 0.0, 1);
    CHECK(b0[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b0[1] == doctest::Approx(3.0).epsilon(1e-11));

    // first derivative vs central finite difference at x0 = 1
    const std::vector<double> b1 = big_b_derivatives(2, 1.0, 1);
    const double h = 1e-5;
    const double fd = (big_b(2, 1.0 + h) - big_b(2, 1.0 - h)) / (2.0 * h);
    CHECK(b1[1] == doctest::Approx(fd).epsilon(1e-7));

    // alpha_n = B_n x0^n / (n! B_0) decays in magnitude for x0 <= 1
    for (int m : {2, 4}) {
        const std::vector<double> bd = big_b_derivatives(m, 1.0, 12);
        double fact = 1.0;
        double prev = 1e300;
        for (int n = 1; n <= 12; ++n) {
            fact *= n;
            const double alpha = std::fabs(bd[n] / (fact * bd[0]));
            CHECK(std::isfinite(alpha));
            CHECK(alpha < prev);
            prev = alpha;
        }
    }
}

TEST_CASE("potential integral: harmonic closed form and moment identity") {
    OscillatorParams p{1.7, 0.0, 2};
    // g = 0, omega_bar = omega: integral of exp(-omega x^2) = sqrt(pi/omega)
    CHECK(potential_integral_bar(p, p.omega) ==
          doctest::Approx(std::sqrt(M_PI / p.omega)).epsilon(1e-12));

    // Ibar = (sqrt(wbar)/omega) M_0(x0) with x0 = 2 g wbar^{m-1}/omega^{2m}
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> ug(-2.0, 2.0), uo(0.5, 2.0);
    for (int rep = 0; rep < 20; ++rep) {
        OscillatorParams q;
        q.m = 2 + rep % 3;
        q.omega = uo(rng);
        q.g = std::pow(10.0, ug(rng));
        const double wbar = uo(rng) + q.omega; // any positive scale works for the identity
        const double x0 = 2.0 * q.g * std::pow(wbar, q.m - 1) / std::pow(q.omega, 2 * q.m);
        const double lhs = potential_integral_bar(q, wbar);
        const double rhs = std::sqrt(wbar) / q.omega * moment(q.m, x0, 0);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
    }

    // dual path at m=2, omega=1, g=1
    OscillatorParams r{1.0, 1.0, 2};
    const double wb = 1.8675335034578;
    const double direct = potential_integral_bar(r, wb);
    const double viamoment = std::sqrt(wb) * moment(2, 2.0 * wb, 0);
    CHECK(direct == doctest::Approx(viamoment).epsilon(1e-11));
}

TEST_CASE("V-moments: consistency, derivative identity, harmonic value") {
    OscillatorParams p{1.0, 1.0, 2};
    const double tau = 1.1;
    CHECK(v_moment(p, tau, 0) == doctest::Approx(i_g_beta(p, tau)).epsilon(1e-13));

    // -d/dtau of the integral equals the first V-moment
    const double h = 1e-6;
    const double fd = -(i_g_beta(p, tau + h) - i_g_beta(p, tau - h)) / (2.0 * h);
    CHECK(v_moment(p, tau, 1) == doctest::Approx(fd).epsilon(1e-7));

    // g = 0, n = 1: (1/(2 tau)) sqrt(2 pi/(tau omega^2))
    OscillatorParams q{1.3, 0.0, 2};
    const double expect = 0.5 / tau * std::sqrt(2.0 * M_PI / (tau * q.omega * q.omega));
    CHECK(v_moment(q, tau, 1) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("I_g(beta): harmonic closed form and dual-scheme agreement") {
    OscillatorParams q{0.8, 0.0, 3};
    const double tau = 0.7;
    CHECK(i_g_beta(q, tau) ==
          doctest::Approx(std::sqrt(2.0 * M_PI / (tau * q.omega * q.omega))).epsilon(1e-12));

    OscillatorParams p{1.0, 1.0, 2};
    boost::math::quadrature::exp_sinh<double> integrator;
    auto f = [&](double x) { return std::exp(-1.0 * p.potential(x)); };
    const double ref = 2.0 * integrator.integrate(f, 1e-15);
    CHECK(i_g_beta(p, 1.0) == doctest::Approx(ref).epsilon(1e-11));
}

TEST_CASE("half-line evenness equals full-line integration") {
    OscillatorParams p{1.0, 0.5, 3};
    const double tau = 0.9;
    auto f = [&](double x) { return std::exp(-tau * p.potential(x)); };
    const double full = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, -40.0, 40.0, 12, 1e-14);
    CHECK(i_g_beta(p, tau) == doctest::Approx(full).epsilon(1e-13));
}

TEST_CASE("moments decrease strictly in x; B is >= 1 and nondecreasing") {
    for (int k : {0, 2, 6}) {
        double prev = moment(2, 0.0, k);
        for (double x : {0.3, 1.0, 4.0, 30.0, 1e3, 1e5}) {
            const double cur = moment(2, x, k);
            CHECK(cur < prev);
            prev = cur;
        }
    }
    double prev_b = 0.999999;
    for (double x : {0.0, 1e-3, 0.1, 1.0, 10.0, 1e3, 1e6}) {
        const double b = big_b(3, x);
        CHECK(b >= 1.0 - 1e-13);
        CHECK(b >= prev_b);
        prev_b = b;
    }
}
