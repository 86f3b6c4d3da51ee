#pragma once

// The acceptance suite behind `anho validate` and the acceptance test binary,
// plus the independent closed-form cross-checks it relies on.

#include <functional>
#include <string>
#include <vector>

#include "anho/quadrature.hpp"
#include "anho/spectrum.hpp"

namespace anho {

namespace crosscheck {

/// Linear beta-coefficient of the n-th Delta-R polynomial, from the closed
/// form -sum_{k=1}^{n-1} k omega_{n-k} (zero for n = 1).
double delta_r_linear(const std::vector<double>& omega_coeffs, int n);

/// beta = 0 value of the n-th Delta-A polynomial, from the alternating
/// composition sum over (omega_l / omega_bar) products.
double delta_a_constant(const std::vector<double>& omega_coeffs, double omega_bar, int n);

/// beta = 0 values S_{n0} assembled from the seven coupling constants, the
/// omega coefficients, the Delta-T constants of the bundle, and Delta-R_{n0}=1.
std::vector<double> s_constants(const SeriesBundle& bundle, int n_max);

/// P_{n1} assembled as S_{n0} + Delta-R_{n1} + sum S_{k0} Delta-R_{l0}.
double p_n1_assembly(const SeriesBundle& bundle, int n);

/// Ground energy from a uniform-grid Dirichlet-box discretization of H,
/// Richardson-refined over two grid spacings. Test oracle only.
double fd_ground_energy(const OscillatorParams& params, double box_halfwidth, int points);

} // namespace crosscheck

namespace validate {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string details;
    double seconds = 0.0;
};

struct ValidationConfig {
    double oracle_tol = 1e-9;
    bool quick = false;
    int threads = 0;          ///< 0: ANHO_THREADS env var, else hardware count
    std::string scratch_dir;  ///< for the figure criterion; empty: system temp
};

constexpr int kCriterionCount = 10;

/// Run one criterion (1-based index).
CriterionResult run_criterion(int index, const ValidationConfig& cfg);

/// Full suite, or the quick subset (harmonic limit, Q polynomials, reduced
/// series consistency) when cfg.quick is set.
std::vector<CriterionResult> run_acceptance(const ValidationConfig& cfg);

/// True when the configured oracle tolerance is looser than the suite's
/// nominal 1e-9 (reported as a degraded-oracle warning, not a failure).
bool oracle_degraded(const ValidationConfig& cfg);

int effective_threads(int requested);

/// Order-preserving parallel map over [0, count).
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

} // namespace validate

} // namespace anho
