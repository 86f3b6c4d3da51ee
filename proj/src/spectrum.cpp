#include "anho/spectrum.hpp"

#include <cmath>

namespace anho {

CoefficientSeries build_delta_r(const CoefficientSeries& d_omega) {
    const int N = d_omega.order();
    CoefficientSeries dr = CoefficientSeries::zero(N);
    for (int n = 1; n <= N; ++n) {
        const CoefficientSeries e =
            series_exp(series_scale(series_mul_beta(d_omega), -static_cast<double>(n)));
        dr = series_add(dr, series_shift(e, n));
    }
    return dr;
}

void build_delta_t(const FrequencySolution& fs, SeriesBundle& bundle) {
    const int N = bundle.order;
    const double wbar = fs.omega_bar;
    const CoefficientSeries d_over = series_scale(bundle.d_omega, 1.0 / wbar);
    const CoefficientSeries two_dr = series_scale(bundle.d_r, 2.0);

    // Delta-A = 1/2 [ln(1 + sum Q_n/wbar y0^n) - ln(1 + 2 Delta-R)]
    bundle.d_a = series_scale(series_sub(series_log1p(d_over), series_log1p(two_dr)), 0.5);

    // tau_c = tau_bar / ((1 + sum Q_n/wbar y0^n)(1 + 2 Delta-R))
    CoefficientSeries denom = series_add(series_add(d_over, two_dr), series_mul(d_over, two_dr));
    denom.set_constant_term(1.0);
    CoefficientSeries recip = series_recip(denom);
    recip.set_constant_term(recip.constant_term() - 1.0);
    bundle.d_tau = series_scale(recip, fs.tau_bar);

    // I_g(beta)/Ibar = sum_n (-1)^n Ibar_n/(n! Ibar) dtau^n; then the log
    CoefficientSeries acc = CoefficientSeries::zero(N);
    CoefficientSeries tau_pow = CoefficientSeries::one(N);
    double fact = 1.0;
    double sign = 1.0;
    for (int n = 1; n <= N; ++n) {
        fact *= n;
        sign = -sign;
        tau_pow = series_mul(tau_pow, bundle.d_tau);
        acc = series_add(acc, series_scale(tau_pow, sign * bundle.v_moments[n] / (fact * bundle.i_bar)));
    }
    bundle.d_b = series_log1p(acc);
    bundle.d_t = series_add(bundle.d_a, bundle.d_b);
}

void build_s_and_p(const FrequencySolution& fs, SeriesBundle& bundle) {
    const double wbar = fs.omega_bar;
    const double l = bundle.log_l;
    bundle.c = {0.5 * (l - 1.0), 0.5 * wbar, wbar * l, 0.5, l, wbar, 1.0};

    const CoefficientSeries& dw = bundle.d_omega;
    const CoefficientSeries& dt = bundle.d_t;
    const CoefficientSeries& dr = bundle.d_r;
    CoefficientSeries s = series_scale(dw, bundle.c[0]);
    s = series_add(s, series_scale(dt, bundle.c[1]));
    s = series_add(s, series_scale(dr, bundle.c[2]));
    s = series_add(s, series_scale(series_mul(dw, dt), bundle.c[3]));
    s = series_add(s, series_scale(series_mul(dw, dr), bundle.c[4]));
    s = series_add(s, series_scale(series_mul(dt, dr), bundle.c[5]));
    s = series_add(s, series_scale(series_mul(series_mul(dw, dt), dr), bundle.c[6]));
    bundle.s = s;

    CoefficientSeries one_plus_dr = dr;
    one_plus_dr.set_constant_term(1.0);
    bundle.p = series_mul(series_exp(series_mul_beta(s)), one_plus_dr);
}

SeriesBundle build_series_bundle(const OscillatorParams& params, int order) {
    params.validate();
    ANHO_REQUIRE(order >= 1, "series order must be >= 1");
    SeriesBundle bundle(order);

    const FrequencySolution fs = solve_omega_bar(params, order);
    bundle.omega_bar = fs.omega_bar;
    bundle.omega_coeffs = fs.omega_coeffs;
    bundle.i_bar = potential_integral_bar(params, fs.omega_bar);
    bundle.log_l = std::log(std::sqrt(fs.omega_bar / M_PI) * bundle.i_bar);
    bundle.e0 = 0.5 * fs.omega_bar * (1.0 - bundle.log_l);
    bundle.v_moments.resize(order + 1);
    for (int n = 0; n <= order; ++n) bundle.v_moments[n] = v_moment(params, fs.tau_bar, n);

    bundle.d_omega = delta_omega_series(fs.omega_coeffs, order);
    bundle.d_r = build_delta_r(bundle.d_omega);
    build_delta_t(fs, bundle);
    build_s_and_p(fs, bundle);
    return bundle;
}

SpectrumResult extract_spectrum(const OscillatorParams& params, int n_max, int order) {
    ANHO_REQUIRE(n_max >= 0, "n_max must be nonnegative");
    ANHO_REQUIRE(order >= n_max + 1, "truncation order must exceed n_max");
    const SeriesBundle bundle = build_series_bundle(params, order);
    SpectrumResult sr;
    sr.params = params;
    sr.e0 = bundle.e0;
    sr.omega_bar = bundle.omega_bar;
    sr.truncation_order = order;
    sr.levels.push_back(bundle.e0);
    for (int n = 1; n <= n_max; ++n) {
        const double pn1 = extract_coefficient(bundle.p, n, 1);
        sr.p_n1.push_back(pn1);
        sr.levels.push_back(bundle.e0 + n * bundle.omega_bar - pn1);
    }
    return sr;
}

double series_z_consistency(const SeriesBundle& bundle, const OscillatorParams& params,
                            double beta) {
    const double y0 = std::exp(-beta * bundle.omega_bar);
    const double z_series = std::exp(-beta * bundle.e0) * bundle.p.evaluate(beta, y0);
    const PartitionEvaluation pe = model_partition(params, beta);
    return std::fabs(z_series - pe.z_value) / pe.z_value;
}

double series_z_consistency(const OscillatorParams& params, double beta, int order) {
    const SeriesBundle bundle = build_series_bundle(params, order);
    return series_z_consistency(bundle, params, beta);
}

} // namespace anho
