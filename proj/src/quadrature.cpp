#include "anho/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace anho {

namespace quad {

namespace {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK dqk15 constants).
const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double kronrod;
    double err;
};

// K15 value with the QUADPACK-scaled error estimate; the rescaling collapses
// the estimate toward machine level on smooth panels, which is what lets the
// global refinement loop terminate.
Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double fv[7][2];
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::fabs(fc) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double absc = h * kXgk[j];
        fv[j][0] = f(c - absc);
        fv[j][1] = f(c + absc);
        const double fsum = fv[j][0] + fv[j][1];
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::fabs(fv[j][0]) + std::fabs(fv[j][1]));
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(fv[j][0] - reskh) + std::fabs(fv[j][1] - reskh));
    resasc *= std::fabs(h);
    double err = std::fabs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double uflow = 50.0 * 2.2e-308;
    err = std::max(err, uflow * std::fabs(resabs));
    return {a, b, resk * h, err};
}

} // namespace

double adaptive_gk(const std::function<double(double)>& f, double a, double b,
                   double rel_tol, double abs_floor) {
    std::vector<Panel> panels{gk15(f, a, b)};
    constexpr int kMaxPanels = 4000;
    while (true) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].kronrod;
            err += panels[i].err;
            if (panels[i].err > panels[worst].err) worst = i;
        }
        const double target = std::max(rel_tol * std::fabs(total), abs_floor);
        if (err <= target) return total;
        if (static_cast<int>(panels.size()) >= kMaxPanels) {
            // the scaled estimate vastly overstates the true K15 error; only
            // give up when it is far off the requested target
            if (err > 1e4 * std::max(target, 1e-300))
                throw QuadratureError("adaptive integration stalled above the requested accuracy");
            return total;
        }
        const Panel p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        panels[worst] = gk15(f, p.a, mid);
        panels.push_back(gk15(f, mid, p.b));
    }
}

double half_line_even(const std::function<double(double)>& f, double scale, double rel_tol) {
    ANHO_REQUIRE(scale > 0.0, "integration scale must be positive");
    double total = 0.0;
    double lo = 0.0, hi = scale;
    int quiet = 0;
    for (int panel = 0; panel < 200; ++panel) {
        const double part =
            adaptive_gk(f, lo, hi, 0.1 * rel_tol, 0.05 * rel_tol * std::fabs(total));
        total += part;
        if (std::fabs(part) <= 0.25 * rel_tol * std::fabs(total) && total != 0.0) {
            if (++quiet >= 2) return 2.0 * total;
        } else {
            quiet = 0;
        }
        lo = hi;
        hi *= 2.0;
    }
    throw QuadratureError("half-line integral failed to converge: tail never became negligible");
}

void gauss_hermite_rule(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    // Nodes bracketed by Sturm bisection on the Jacobi matrix, then polished
    // by Newton on the orthonormal recurrence; weight function exp(-y^2).
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) {
            nodes = it->second.first;
            weights = it->second.second;
            return;
        }
    }
    const double kPim4 = 0.7511255444649425; // pi^{-1/4}
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);

    // Hermite function h_j(z) = p_j(z) exp(-z^2/2) and its degree-(n-1)
    // companion; bounded where the bare polynomials overflow.
    auto hermite_pair = [&](double z, double& hn, double& hnm1) {
        double p1 = kPim4 * std::exp(-0.5 * z * z), p2 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double p3 = p2;
            p2 = p1;
            p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(j / (j + 1.0)) * p3;
        }
        hn = p1;
        hnm1 = p2;
    };
    // eigenvalue count below x for the Jacobi matrix (zero diagonal,
    // off-diagonal sqrt(j/2)); nodes are its eigenvalues
    auto sturm_below = [&](double x) {
        int count = 0;
        double q = -x;
        if (q < 0.0) ++count;
        for (int j = 1; j < n; ++j) {
            double denom = q;
            if (std::fabs(denom) < 1e-300) denom = denom < 0.0 ? -1e-300 : 1e-300;
            q = -x - 0.5 * j / denom;
            if (q < 0.0) ++count;
        }
        return count;
    };

    const double upper = std::sqrt(2.0 * n + 1.0);
    const int half = n / 2;
    for (int i = 0; i < half; ++i) {
        // i-th positive node from the top: bracket by bisection on the count
        const int want = n - i; // eigenvalues strictly below the node
        double lo = 0.0, hi = upper;
        for (int it = 0; it < 64; ++it) {
            const double mid = 0.5 * (lo + hi);
            (sturm_below(mid) < want ? lo : hi) = mid;
        }
        double z = 0.5 * (lo + hi);
        if (kPim4 * std::exp(-0.5 * z * z) == 0.0) {
            // so far out that the weight underflows; the bisected node is
            // already machine-accurate
            nodes[i] = z;
            nodes[n - 1 - i] = -z;
            continue;
        }
        double hn = 0.0, hnm1 = 0.0;
        for (int it = 0; it < 8; ++it) {
            hermite_pair(z, hn, hnm1);
            const double deriv = std::sqrt(2.0 * n) * hnm1; // p_n'(z), scaled
            if (deriv == 0.0) break;
            const double step = hn / deriv;
            z -= step;
            if (std::fabs(step) <= 1e-16 * std::max(1.0, std::fabs(z))) break;
        }
        hermite_pair(z, hn, hnm1);
        const double ppw = std::sqrt(2.0 * n) * hnm1;
        if (ppw == 0.0) throw QuadratureError("Gauss-Hermite weight evaluation failed");
        nodes[i] = z;
        nodes[n - 1 - i] = -z;
        weights[i] = 2.0 * std::exp(-z * z) / (ppw * ppw);
        weights[n - 1 - i] = weights[i];
    }
    if (n % 2 == 1) {
        double hn = 0.0, hnm1 = 0.0;
        hermite_pair(0.0, hn, hnm1);
        const double ppw = std::sqrt(2.0 * n) * hnm1;
        nodes[half] = 0.0;
        weights[half] = 2.0 / (ppw * ppw);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(n, std::make_pair(nodes, weights));
}

} // namespace quad

namespace {

constexpr double kQuadTol = 5e-14;

double pow_int(double y, int k) {
    double acc = 1.0;
    while (k-- > 0) acc *= y;
    return acc;
}

} // namespace

double MomentTable::at(int k) const {
    ANHO_REQUIRE(k >= 0 && k % 2 == 0, "moment index must be even and nonnegative");
    auto it = values.find(k);
    ANHO_REQUIRE(it != values.end(), "moment index not present in table");
    return it->second;
}

double moment_gauss_hermite(int m, double x, int k) {
    std::vector<double> nodes, weights;
    double prev = 0.0;
    for (int n = 64; n <= 2048; n *= 2) {
        quad::gauss_hermite_rule(n, nodes, weights);
        double acc = 0.0;
        for (int i = 0; i < n; ++i)
            acc += weights[i] * pow_int(nodes[i], k) * std::exp(-x * pow_int(nodes[i], 2 * m));
        if (n > 64 && std::fabs(acc - prev) <= kQuadTol * std::fabs(acc)) return acc;
        prev = acc;
    }
    throw QuadratureError("Gauss-Hermite moment did not converge under node doubling");
}

double moment_adaptive(int m, double x, int k) {
    if (x <= 1.0) {
        // Direct in y; the exp(-y^2) factor sets the width, y^k pushes the
        // peak out to sqrt(k/2).
        const double scale = std::max(1.0, std::sqrt(0.5 * k));
        auto f = [=](double y) { return pow_int(y, k) * std::exp(-y * y - x * pow_int(y, 2 * m)); };
        return quad::half_line_even(f, scale, kQuadTol);
    }
    // u = x^{1/(2m)} y: the x-term becomes u^{2m} and the Gaussian shrinks to
    // exp(-s u^2) with s = x^{-1/m} <= 1.
    const double s = std::pow(x, -1.0 / m);
    const double log_pref = -(k + 1.0) / (2.0 * m) * std::log(x);
    const double scale = std::max(1.0, std::pow(k / (2.0 * m) + 1.0, 1.0 / (2 * m)));
    auto f = [=](double u) { return pow_int(u, k) * std::exp(-s * u * u - pow_int(u, 2 * m)); };
    return std::exp(log_pref) * quad::half_line_even(f, scale, kQuadTol);
}

double moment(int m, double x, int k) {
    ANHO_REQUIRE(m >= 2, "anharmonicity exponent m must be >= 2");
    ANHO_REQUIRE(k >= 0 && k % 2 == 0, "moment index must be even and nonnegative");
    if (x < 0.0) throw std::domain_error("moment: x must be nonnegative");
    if (x <= 1.0) {
        try {
            return moment_gauss_hermite(m, x, k);
        } catch (const QuadratureError&) {
            return moment_adaptive(m, x, k);
        }
    }
    return moment_adaptive(m, x, k);
}

MomentTable moment_table(int m, double x, int k_max) {
    MomentTable t;
    t.m = m;
    t.x = x;
    for (int k = 0; k <= k_max; k += 2) t.values[k] = moment(m, x, k);
    return t;
}

double big_b(int m, double x) {
    return moment(m, x, 0) / (2.0 * moment(m, x, 2));
}

std::vector<double> big_b_derivatives(int m, double x0, int order) {
    ANHO_REQUIRE(order >= 0, "derivative order must be nonnegative");
    const MomentTable t = moment_table(m, x0, 2 * m * order + 2);
    // B = N/D with N = M_0, D = 2 M_2; dM_k/dx = -M_{k+2m}.
    std::vector<double> nd(order + 1), dd(order + 1);
    double sign = 1.0;
    for (int j = 0; j <= order; ++j) {
        nd[j] = sign * t.at(2 * m * j);
        dd[j] = 2.0 * sign * t.at(2 * m * j + 2);
        sign = -sign;
    }
    std::vector<double> b(order + 1);
    b[0] = nd[0] / dd[0];
    std::vector<std::vector<double>> binom(order + 1, std::vector<double>(order + 1, 0.0));
    for (int n = 0; n <= order; ++n) {
        binom[n][0] = 1.0;
        for (int r = 1; r <= n; ++r)
            binom[n][r] = binom[n - 1][r - 1] + (r <= n - 1 ? binom[n - 1][r] : 0.0);
    }
    for (int n = 1; n <= order; ++n) {
        double acc = nd[n];
        for (int r = 0; r < n; ++r) acc -= binom[n][r] * b[r] * dd[n - r];
        b[n] = acc / dd[0];
    }
    return b;
}

namespace {

double potential_scale(const OscillatorParams& p, double tau) {
    double s = std::sqrt(2.0 / tau) / p.omega;
    if (p.g > 0.0) s = std::min(s, std::pow(tau * p.g, -1.0 / (2.0 * p.m)));
    return s;
}

} // namespace

double potential_integral_bar(const OscillatorParams& params, double omega_bar) {
    params.validate();
    ANHO_REQUIRE(omega_bar > 0.0, "omega_bar must be positive");
    return i_g_beta(params, 2.0 / omega_bar);
}

double v_moment(const OscillatorParams& params, double tau_bar, int n) {
    params.validate();
    ANHO_REQUIRE(tau_bar > 0.0, "tau_bar must be positive");
    ANHO_REQUIRE(n >= 0, "V-moment order must be nonnegative");
    if (n == 0) return i_g_beta(params, tau_bar);
    auto f = [&params, tau_bar, n](double x) {
        const double v = params.potential(x);
        double vp = 1.0;
        for (int i = 0; i < n; ++i) vp *= v;
        return vp * std::exp(-tau_bar * v);
    };
    return quad::half_line_even(f, potential_scale(params, tau_bar), kQuadTol);
}

double i_g_beta(const OscillatorParams& params, double tau_c) {
    params.validate();
    ANHO_REQUIRE(tau_c > 0.0, "tau_c must be positive");
    auto f = [&params, tau_c](double x) { return std::exp(-tau_c * params.potential(x)); };
    return quad::half_line_even(f, potential_scale(params, tau_c), kQuadTol);
}

} // namespace anho
