#include "anho/frequency.hpp"

#include <cmath>
#include <string>

namespace anho {

namespace {

double pow_int(double y, int k) {
    double acc = 1.0;
    while (k-- > 0) acc *= y;
    return acc;
}

// Bracketed bisection/secant hybrid; assumes fn(lo) and fn(hi) have opposite
// signs. Iterates to near machine precision in the argument.
template <typename Fn>
double bisect_root(Fn&& fn, double lo, double hi, double flo, double fhi) {
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        // secant proposal, kept if it lands safely inside the bracket
        const double denom = fhi - flo;
        if (denom != 0.0) {
            const double sec = lo - flo * (hi - lo) / denom;
            if (sec > lo + 0.1 * (hi - lo) && sec < hi - 0.1 * (hi - lo)) mid = sec;
        }
        const double fm = fn(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
        if (hi - lo <= 4e-16 * std::max(std::fabs(lo), std::fabs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace

double omega_g_of_tau(const OscillatorParams& params, double tau) {
    params.validate();
    ANHO_REQUIRE(tau > 0.0, "tau must be positive");
    if (params.g == 0.0) return params.omega;
    const double xarg = pow_int(2.0, params.m) * params.g /
                        (std::pow(tau, params.m - 1) * pow_int(params.omega, 2 * params.m));
    return params.omega * std::sqrt(big_b(params.m, xarg));
}

FrequencySolution solve_omega_bar(const OscillatorParams& params, int deriv_order) {
    params.validate();
    ANHO_REQUIRE(deriv_order >= 0, "derivative order must be nonnegative");
    FrequencySolution fs;
    const double om = params.omega;
    const int m = params.m;

    auto map = [&](double w) {
        const double x = 2.0 * params.g * pow_int(w, m - 1) / pow_int(om, 2 * m);
        return om * std::sqrt(big_b(m, x));
    };

    double w = om;
    if (params.g == 0.0) {
        w = om; // B(0) = 1 exactly in the model; keep the harmonic limit exact
    } else {
        bool converged = false;
        double damping = 1.0;
        double prev_step = 0.0;
        for (int it = 0; it < 120; ++it) {
            const double target = map(w);
            const double step = target - w;
            if (std::fabs(step) <= 1e-14 * w) {
                converged = true;
                break;
            }
            if (it > 0 && step * prev_step < 0.0) damping = 0.5; // oscillation: damp
            w += damping * step;
            prev_step = step;
        }
        if (!converged) {
            // residual w - map(w) is negative at w = omega and positive for large w
            double hi = 2.0 * w;
            double fhi = hi - map(hi);
            int guard = 0;
            while (fhi < 0.0 && guard++ < 200) {
                hi *= 2.0;
                fhi = hi - map(hi);
            }
            if (fhi < 0.0)
                throw SolverError("solve_omega_bar: could not bracket the fixed point (g=" +
                                  std::to_string(params.g) + ", m=" + std::to_string(m) + ")");
            const double lo = om * (1.0 - 1e-12);
            w = bisect_root([&](double v) { return v - map(v); }, lo, hi, lo - map(lo), fhi);
        }
        const double resid = std::fabs(w - map(w));
        if (resid > 1e-12 * w)
            throw SolverError("solve_omega_bar: residual " + std::to_string(resid) +
                              " exceeds tolerance at g=" + std::to_string(params.g));
    }

    fs.omega_bar = w;
    fs.x0 = 2.0 * params.g * pow_int(w, m - 1) / pow_int(om, 2 * m);
    fs.tau_bar = 2.0 / w;
    fs.b_derivs = big_b_derivatives(m, fs.x0, deriv_order);
    fs.omega_coeffs = omega_coefficients(fs, params, deriv_order);
    return fs;
}

ThermalSolution solve_thermal(const OscillatorParams& params, double beta) {
    params.validate();
    ANHO_REQUIRE(beta > 0.0, "beta must be positive");
    ThermalSolution ts;
    ts.beta = beta;
    if (params.g == 0.0) {
        // tau w/2 = tanh(beta w/2) in closed form
        ts.omega_g_beta = params.omega;
        ts.tau_c = 2.0 * std::tanh(0.5 * beta * params.omega) / params.omega;
        ts.n_c = beta / ts.tau_c;
        return ts;
    }
    // Root of rho(tau) = tau w(tau)/2 - tanh(beta w(tau)/2): negative as
    // tau -> 0, positive at tau = min(beta, 2/omega) since z > tanh z.
    auto rho = [&](double tau) {
        const double w = omega_g_of_tau(params, tau);
        return 0.5 * tau * w - std::tanh(0.5 * beta * w);
    };
    double hi = std::min(beta, 2.0 / params.omega);
    double fhi = rho(hi);
    if (fhi < 0.0)
        throw SolverError("solve_thermal: upper bracket unexpectedly negative");
    double lo = hi;
    double flo = fhi;
    int guard = 0;
    while (flo > 0.0 && guard++ < 400) {
        lo *= 0.25;
        flo = rho(lo);
    }
    if (flo > 0.0) throw SolverError("solve_thermal: could not bracket tau_c");
    const double tau = bisect_root(rho, lo, hi, flo, fhi);
    ts.tau_c = tau;
    ts.omega_g_beta = omega_g_of_tau(params, tau);
    ts.n_c = beta / tau;
    const double resid =
        std::fabs(ts.n_c - 0.5 * beta * ts.omega_g_beta / std::tanh(0.5 * beta * ts.omega_g_beta));
    if (resid > 1e-12 * ts.n_c)
        throw SolverError("solve_thermal: PMS residual " + std::to_string(resid) +
                          " exceeds tolerance at beta=" + std::to_string(beta));
    return ts;
}

namespace {

// Sum over compositions of `total` into `parts` parts (each >= 1) of the
// product of seq values, via the convolution power recurrence.
// conv_pow[p][t] = sum over compositions of t into p parts of prod seq[l_i].
std::vector<std::vector<double>> composition_powers(const std::vector<double>& seq, int total,
                                                    int max_parts) {
    std::vector<std::vector<double>> cp(max_parts + 1, std::vector<double>(total + 1, 0.0));
    cp[0][0] = 1.0;
    for (int p = 1; p <= max_parts; ++p)
        for (int t = p; t <= total; ++t) {
            double acc = 0.0;
            for (int l = 1; l + p - 1 <= t; ++l) acc += seq[l] * cp[p - 1][t - l];
            cp[p][t] = acc;
        }
    return cp;
}

} // namespace

std::vector<double> omega_coefficients(const FrequencySolution& fs,
                                       const OscillatorParams& params, int n_max) {
    params.validate();
    ANHO_REQUIRE(n_max >= 0, "n_max must be nonnegative");
    ANHO_REQUIRE(static_cast<int>(fs.b_derivs.size()) >= n_max + 1,
                 "B-derivatives required to order n_max");
    std::vector<double> w(n_max + 1, 0.0);
    if (params.g == 0.0 || n_max == 0) return w;

    const int m = params.m;
    const double wbar = fs.omega_bar;
    std::vector<double> alpha(n_max + 1, 0.0);
    double fact = 1.0;
    double x0n = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        fact *= n;
        x0n *= fs.x0;
        alpha[n] = fs.b_derivs[n] * x0n / (fact * fs.b_derivs[0]);
    }
    std::vector<double> beta_half(n_max + 1, 0.0);
    {
        double num = 1.0;
        double f = 1.0;
        for (int n = 1; n <= n_max; ++n) {
            num *= 0.5 - (n - 1);
            f *= n;
            beta_half[n] = num / f;
        }
    }
    const double denom = 1.0 - alpha[1] * (m - 1) / 2.0;
    if (std::fabs(denom) < 1e-10)
        throw SolverError("omega_coefficients: singular denominator 1 - alpha1 (m-1)/2");
    const double big_a = wbar / denom;

    std::vector<std::vector<double>> binom(m, std::vector<double>(m, 0.0));
    for (int n = 0; n < m; ++n) {
        binom[n][0] = 1.0;
        for (int r = 1; r <= n; ++r)
            binom[n][r] = binom[n - 1][r - 1] + (r <= n - 1 ? binom[n - 1][r] : 0.0);
    }

    std::vector<double> a(n_max + 1, 0.0), b(n_max + 1, 0.0), c(n_max + 1, 0.0);
    double s_partial = 1.0; // S_n = 1 + sum_{k<n} omega_k/wbar, accumulated as we go
    for (int n = 1; n <= n_max; ++n) {
        const double s_n = s_partial;
        double t_n = 0.0;
        for (int k = 2; k <= m - 1; ++k) {
            const auto cp = composition_powers(a, n, k);
            t_n += binom[m - 1][k] * cp[k][n];
        }
        double u_n = 0.0;
        {
            const auto cp = composition_powers(b, n, n);
            for (int k = 2; k <= n; ++k) u_n += alpha[k] * cp[k][n];
            u_n *= 0.5;
        }
        double v_n = 0.0;
        {
            const auto cp = composition_powers(c, n, n);
            for (int k = 2; k <= n; ++k) v_n += beta_half[k] * cp[k][n];
        }
        w[n] = big_a * (alpha[1] * (m - 1) * s_n + 0.5 * alpha[1] * t_n + u_n + v_n);
        a[n] = w[n] / wbar + 2.0 * s_n;
        b[n] = (m - 1) * a[n] + t_n;
        c[n] = alpha[1] * b[n] + 2.0 * u_n;
        s_partial += w[n] / wbar;
    }
    return w;
}

CoefficientSeries delta_omega_series(const std::vector<double>& omega_coeffs, int order) {
    ANHO_REQUIRE(order >= 1, "series order must be >= 1");
    ANHO_REQUIRE(static_cast<int>(omega_coeffs.size()) >= order + 1,
                 "omega coefficients required to the series order");
    // Fixed point d = sum_n omega_n y0^n exp(-beta n d): order k of the right
    // side involves d only below order k, so N sweeps converge exactly.
    CoefficientSeries d = CoefficientSeries::zero(order);
    for (int sweep = 0; sweep < order; ++sweep) {
        CoefficientSeries next = CoefficientSeries::zero(order);
        for (int n = 1; n <= order; ++n) {
            if (omega_coeffs[n] == 0.0) continue;
            const CoefficientSeries e =
                series_exp(series_scale(series_mul_beta(d), -static_cast<double>(n)));
            next = series_add(next, series_scale(series_shift(e, n), omega_coeffs[n]));
        }
        d = next;
    }
    return d;
}

std::vector<BetaPolynomial> q_polynomials(const std::vector<double>& omega_coeffs, int n_max) {
    const CoefficientSeries d = delta_omega_series(omega_coeffs, n_max);
    std::vector<BetaPolynomial> q(n_max + 1);
    for (int n = 1; n <= n_max; ++n) q[n] = d.term(n);
    return q;
}

} // namespace anho
