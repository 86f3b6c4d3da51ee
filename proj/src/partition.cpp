#include "anho/partition.hpp"

#include <cmath>

namespace anho {

PartitionEvaluation model_partition(const OscillatorParams& params, double beta) {
    params.validate();
    ANHO_REQUIRE(beta > 0.0, "beta must be positive");
    PartitionEvaluation pe;
    pe.beta = beta;
    pe.thermal = solve_thermal(params, beta);
    const double w = pe.thermal.omega_g_beta;
    const double ig = i_g_beta(params, pe.thermal.tau_c);
    const double coth = 1.0 / std::tanh(0.5 * beta * w);
    pe.c_beta = std::sqrt(w / (M_PI * coth)) * ig;
    // ln Z = n_c ln C - beta w/2 - ln(1 - exp(-beta w)); safe at any beta*w
    pe.log_z = pe.thermal.n_c * std::log(pe.c_beta) - 0.5 * beta * w -
               std::log1p(-std::exp(-beta * w));
    pe.z_value = std::exp(pe.log_z);
    pe.free_energy = -pe.log_z / beta;
    return pe;
}

double ground_energy(const OscillatorParams& params) {
    params.validate();
    const FrequencySolution fs = solve_omega_bar(params, 0);
    const double ibar = potential_integral_bar(params, fs.omega_bar);
    return 0.5 * fs.omega_bar * (1.0 - std::log(std::sqrt(fs.omega_bar / M_PI) * ibar));
}

std::vector<FreeEnergyPoint> free_energy_curve(const OscillatorParams& params,
                                               const std::vector<double>& betas) {
    std::vector<FreeEnergyPoint> out;
    out.reserve(betas.size());
    for (double b : betas) {
        const PartitionEvaluation pe = model_partition(params, b);
        out.push_back({b, pe.free_energy});
    }
    return out;
}

} // namespace anho
