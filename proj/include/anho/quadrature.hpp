#pragma once

// One-dimensional integrals behind the model: Gaussian-weighted moments
// M_k(x) = int y^k exp(-y^2 - x y^{2m}) dy, the moment ratio B(x) and its
// x-derivatives, and the potential integrals over exp(-tau V(x)).

#include <functional>
#include <map>
#include <vector>

#include "anho/errors.hpp"

namespace anho {

/// Physical inputs of H = -1/2 d^2/dx^2 + 1/2 w^2 x^2 + g x^{2m}.
struct OscillatorParams {
    double omega = 1.0;
    double g = 0.0;
    int m = 2;

    void validate() const {
        ANHO_REQUIRE(omega > 0.0, "omega must be positive");
        ANHO_REQUIRE(g >= 0.0, "coupling g must be nonnegative");
        ANHO_REQUIRE(m >= 2, "anharmonicity exponent m must be >= 2");
    }
    double potential(double x) const {
        double xp = 1.0;
        for (int i = 0; i < 2 * m; ++i) xp *= x;
        return 0.5 * omega * omega * x * x + g * xp;
    }
};

/// Even-k moments M_k(x) at fixed (m, x). Odd moments vanish by symmetry and
/// are never stored.
struct MomentTable {
    int m = 2;
    double x = 0.0;
    std::map<int, double> values;

    double at(int k) const;
};

/// M_k(x) to 1e-12 relative accuracy (even k >= 0, x >= 0).
double moment(int m, double x, int k);

/// The two scheme-specific routes behind moment(); exposed so the dual-scheme
/// agreement can be tested directly. gauss_hermite covers x <= 1; adaptive
/// handles any x via the u = x^{1/(2m)} y substitution when x > 1.
double moment_gauss_hermite(int m, double x, int k);
double moment_adaptive(int m, double x, int k);

/// Moment table covering k = 0, 2, ..., k_max.
MomentTable moment_table(int m, double x, int k_max);

/// B(x) = M_0(x) / (2 M_2(x)); equals 1 at x = 0 and grows like x^{1/m}.
double big_b(int m, double x);

/// d^n B / dx^n at x0 for n = 0..order, via dM_k/dx = -M_{k+2m} and the
/// iterated quotient rule. No finite differences anywhere on this path.
std::vector<double> big_b_derivatives(int m, double x0, int order);

/// int exp(-(2/omega_bar) V(x)) dx.
double potential_integral_bar(const OscillatorParams& params, double omega_bar);

/// int V(x)^n exp(-tau_bar V(x)) dx.
double v_moment(const OscillatorParams& params, double tau_bar, int n);

/// int exp(-tau_c V(x)) dx.
double i_g_beta(const OscillatorParams& params, double tau_c);

namespace quad {

/// Adaptive Gauss-Kronrod (G7,K15) on [a, b] to a relative tolerance.
double adaptive_gk(const std::function<double(double)>& f, double a, double b,
                   double rel_tol, double abs_floor = 0.0);

/// Integral over [0, inf) of an even-decaying integrand, doubled; `scale`
/// sets the first panel width.
double half_line_even(const std::function<double(double)>& f, double scale, double rel_tol);

/// Gauss-Hermite nodes/weights for weight exp(-y^2) on the full line.
void gauss_hermite_rule(int n, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace quad

} // namespace anho
