#pragma once

// The closed-form model partition function Z(beta), its free energy, and the
// ground-state energy from the zero-temperature limit.

#include <vector>

#include "anho/frequency.hpp"
#include "anho/quadrature.hpp"

namespace anho {

struct PartitionEvaluation {
    double beta = 0.0;
    double z_value = 0.0;     ///< C(beta)^{n_c} / (2 sinh(beta w_g / 2))
    double log_z = 0.0;       ///< evaluated in the log domain; z_value = exp(log_z)
    double free_energy = 0.0; ///< -log_z / beta
    double c_beta = 0.0;      ///< C(beta)
    ThermalSolution thermal;
};

struct FreeEnergyPoint {
    double beta = 0.0;
    double free_energy = 0.0;
};

PartitionEvaluation model_partition(const OscillatorParams& params, double beta);

/// E0 = (wbar/2) [1 - ln(sqrt(wbar/pi) Ibar)], the closed zero-temperature
/// form; never obtained by finite-beta extrapolation.
double ground_energy(const OscillatorParams& params);

std::vector<FreeEnergyPoint> free_energy_curve(const OscillatorParams& params,
                                               const std::vector<double>& betas);

} // namespace anho
