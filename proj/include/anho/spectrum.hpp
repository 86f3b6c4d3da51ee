#pragma once

// y0-expansion of the partition function and the level extraction
// E_n = E0 + n wbar - P_n1, where P_n1 is the linear beta-coefficient of the
// n-th series polynomial.

#include <array>
#include <vector>

#include "anho/frequency.hpp"
#include "anho/partition.hpp"
#include "anho/quadrature.hpp"
#include "anho/series.hpp"

namespace anho {

/// All intermediate series of the expansion, kept so tests can probe each
/// stage against its closed form or against the direct solver.
struct SeriesBundle {
    int order = 0;
    double e0 = 0.0;
    double omega_bar = 0.0;
    double i_bar = 0.0;              ///< Ibar = int exp(-(2/wbar) V)
    double log_l = 0.0;              ///< L = ln(sqrt(wbar/pi) Ibar)
    std::vector<double> omega_coeffs;
    std::vector<double> v_moments;   ///< Ibar_0 .. Ibar_N
    CoefficientSeries d_omega;       ///< effective-frequency shift, term n = Q_n
    CoefficientSeries d_r;
    CoefficientSeries d_a;
    CoefficientSeries d_b;
    CoefficientSeries d_t;           ///< d_a + d_b
    CoefficientSeries d_tau;
    CoefficientSeries s;
    CoefficientSeries p;             ///< exp(beta s) (1 + d_r); constant term 1
    std::array<double, 7> c{};       ///< the seven coupling constants of s

    SeriesBundle(int n)
        : order(n), d_omega(n, 0.0), d_r(n, 0.0), d_a(n, 0.0), d_b(n, 0.0), d_t(n, 0.0),
          d_tau(n, 0.0), s(n, 0.0), p(n, 1.0) {}
};

struct SpectrumResult {
    OscillatorParams params;
    double e0 = 0.0;
    double omega_bar = 0.0;
    std::vector<double> p_n1;   ///< n = 1 .. n_max
    std::vector<double> levels; ///< E_0 .. E_n_max
    int truncation_order = 0;
};

/// Delta-R = sum_n y0^n exp(-beta n Delta-omega) as a truncated series.
CoefficientSeries build_delta_r(const CoefficientSeries& d_omega);

/// Delta-T = Delta-A + Delta-B; also fills d_a, d_b and d_tau in the bundle.
/// Needs the V-moments at tau_bar up to the truncation order.
void build_delta_t(const FrequencySolution& fs, SeriesBundle& bundle);

/// Assemble s (seven c-coefficients) and p = exp(beta s) (1 + Delta-R).
void build_s_and_p(const FrequencySolution& fs, SeriesBundle& bundle);

/// Full pipeline at truncation order N.
SeriesBundle build_series_bundle(const OscillatorParams& params, int order);

SpectrumResult extract_spectrum(const OscillatorParams& params, int n_max = 8, int order = 12);

/// |Z_series - Z_direct| / Z_direct for the truncated expansion at beta.
double series_z_consistency(const OscillatorParams& params, double beta, int order);
double series_z_consistency(const SeriesBundle& bundle, const OscillatorParams& params,
                            double beta);

} // namespace anho
