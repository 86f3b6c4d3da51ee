#pragma once

// Self-consistency problems for the effective frequency: the zero-temperature
// fixed point wbar, the finite-temperature PMS solution (n_c, tau_c), the
// expansion coefficients omega_n, and the Q_n(beta) polynomials.

#include <vector>

#include "anho/quadrature.hpp"
#include "anho/series.hpp"

namespace anho {

struct FrequencySolution {
    double omega_bar = 0.0;           ///< fixed point of w = omega sqrt(B(2 g w^{m-1}/omega^{2m}))
    double x0 = 0.0;                  ///< 2 g omega_bar^{m-1} / omega^{2m}
    double tau_bar = 0.0;             ///< 2 / omega_bar
    std::vector<double> b_derivs;     ///< B_0 .. B_order at x0
    std::vector<double> omega_coeffs; ///< omega_1 .. omega_order (index 0 unused)
};

struct ThermalSolution {
    double beta = 0.0;
    double n_c = 0.0;       ///< continuous PMS index, beta / tau_c
    double tau_c = 0.0;
    double omega_g_beta = 0.0;
};

/// Effective frequency at time step tau (Eq. for omega_g(tau)).
double omega_g_of_tau(const OscillatorParams& params, double tau);

/// Zero-temperature frequency with B-derivatives filled to `deriv_order` and
/// omega-coefficients to the same order. Damped fixed-point iteration with a
/// bracketed-bisection fallback; relative residual <= ~1e-13.
FrequencySolution solve_omega_bar(const OscillatorParams& params, int deriv_order = 12);

/// Finite-temperature PMS solution at inverse temperature beta, found as a
/// one-dimensional root problem in tau_c.
ThermalSolution solve_thermal(const OscillatorParams& params, double beta);

/// omega_1 .. omega_n_max from the recursion in the B-derivative data.
/// Entry [0] is unused (zero); entry [n] holds omega_n.
std::vector<double> omega_coefficients(const FrequencySolution& fs,
                                       const OscillatorParams& params, int n_max);

/// Q_1 .. Q_n_max as beta-polynomials (degree n-1), computed by solving
/// d = sum_n omega_n y0^n exp(-beta n d) order by order in the series algebra.
std::vector<BetaPolynomial> q_polynomials(const std::vector<double>& omega_coeffs, int n_max);

/// The same solve, returned as the series Delta-omega_g (term n = Q_n).
CoefficientSeries delta_omega_series(const std::vector<double>& omega_coeffs, int order);

} // namespace anho
