#include "anho/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "anho/frequency.hpp"

namespace anho {

SymmetricMatrix hamiltonian_matrix(const OscillatorParams& params, int basis_size,
                                   double basis_frequency) {
    params.validate();
    ANHO_REQUIRE(basis_size >= 2 * params.m + 1, "basis must exceed the x^{2m} bandwidth");
    ANHO_REQUIRE(basis_frequency > 0.0, "basis frequency must be positive");
    const int m = params.m;
    const double cap_omega = basis_frequency;
    const int padded = basis_size + 2 * m;

    // x^{2m} as a repeated banded product of the tridiagonal position
    // operator; padding keeps the truncated block exact.
    std::vector<double> t(padded - 1);
    for (int i = 0; i + 1 < padded; ++i) t[i] = std::sqrt((i + 1) / (2.0 * cap_omega));
    std::vector<double> cur(static_cast<std::size_t>(padded) * padded, 0.0);
    for (int i = 0; i < padded; ++i) cur[static_cast<std::size_t>(i) * padded + i] = 1.0;
    int band = 0;
    std::vector<double> next(cur.size());
    for (int p = 0; p < 2 * m; ++p) {
        std::fill(next.begin(), next.end(), 0.0);
        for (int i = 0; i < padded; ++i) {
            const int jlo = std::max(0, i - band - 1);
            const int jhi = std::min(padded - 1, i + band + 1);
            for (int j = jlo; j <= jhi; ++j) {
                double acc = 0.0;
                if (j > 0) acc += cur[static_cast<std::size_t>(i) * padded + j - 1] * t[j - 1];
                if (j + 1 < padded) acc += cur[static_cast<std::size_t>(i) * padded + j + 1] * t[j];
                next[static_cast<std::size_t>(i) * padded + j] = acc;
            }
        }
        cur.swap(next);
        ++band;
    }

    SymmetricMatrix h(basis_size);
    for (int i = 0; i < basis_size; ++i) {
        const int jlo = std::max(0, i - band);
        const int jhi = std::min(basis_size - 1, i + band);
        for (int j = jlo; j <= jhi; ++j)
            h.at(i, j) = params.g * cur[static_cast<std::size_t>(i) * padded + j];
    }
    const double w2 = params.omega * params.omega;
    for (int i = 0; i < basis_size; ++i) {
        h.at(i, i) += 0.25 * cap_omega * (2 * i + 1) + w2 * (2 * i + 1) / (4.0 * cap_omega);
        if (i + 2 < basis_size) {
            const double s = std::sqrt((i + 1.0) * (i + 2.0));
            const double v = -0.25 * cap_omega * s + w2 * s / (4.0 * cap_omega);
            h.at(i, i + 2) += v;
            h.at(i + 2, i) += v;
        }
    }
    return h;
}

std::vector<double> jacobi_eigenvalues(SymmetricMatrix a) {
    const int n = a.n;
    std::vector<double> d(n), b(n), z(n, 0.0);
    for (int i = 0; i < n; ++i) b[i] = d[i] = a.at(i, i);

    for (int sweep = 1; sweep <= 60; ++sweep) {
        double sm = 0.0;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) sm += std::fabs(a.at(p, q));
        if (sm == 0.0) {
            std::sort(d.begin(), d.end());
            return d;
        }
        const double tresh = sweep < 4 ? 0.2 * sm / (n * n) : 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double g = 100.0 * std::fabs(a.at(p, q));
                if (sweep > 4 && std::fabs(d[p]) + g == std::fabs(d[p]) &&
                    std::fabs(d[q]) + g == std::fabs(d[q])) {
                    a.at(p, q) = 0.0;
                } else if (std::fabs(a.at(p, q)) > tresh) {
                    double h = d[q] - d[p];
                    double t;
                    if (std::fabs(h) + g == std::fabs(h)) {
                        t = a.at(p, q) / h;
                    } else {
                        const double theta = 0.5 * h / a.at(p, q);
                        t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
                        if (theta < 0.0) t = -t;
                    }
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const double tau = s / (1.0 + c);
                    h = t * a.at(p, q);
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    a.at(p, q) = 0.0;
                    auto rotate = [&](int i, int j, int k, int l) {
                        const double gg = a.at(i, j);
                        const double hh = a.at(k, l);
                        a.at(i, j) = gg - s * (hh + gg * tau);
                        a.at(k, l) = hh + s * (gg - hh * tau);
                    };
                    for (int j = 0; j < p; ++j) rotate(j, p, j, q);
                    for (int j = p + 1; j < q; ++j) rotate(p, j, j, q);
                    for (int j = q + 1; j < n; ++j) rotate(p, j, q, j);
                }
            }
        }
        for (int p = 0; p < n; ++p) {
            b[p] += z[p];
            d[p] = b[p];
            z[p] = 0.0;
        }
    }
    throw SolverError("jacobi_eigenvalues: sweeps exhausted without convergence");
}

std::vector<double> parity_eigenvalues(const SymmetricMatrix& h) {
    const int n = h.n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((i + j) % 2 == 1 && h.at(i, j) != 0.0)
                throw SolverError("parity_eigenvalues: off-parity block is not exactly zero");
    const int ne = (n + 1) / 2, no = n / 2;
    SymmetricMatrix even(ne), odd(no);
    for (int i = 0; i < ne; ++i)
        for (int j = 0; j < ne; ++j) even.at(i, j) = h.at(2 * i, 2 * j);
    for (int i = 0; i < no; ++i)
        for (int j = 0; j < no; ++j) odd.at(i, j) = h.at(2 * i + 1, 2 * j + 1);
    std::vector<double> ev = jacobi_eigenvalues(std::move(even));
    const std::vector<double> ov = jacobi_eigenvalues(std::move(odd));
    ev.insert(ev.end(), ov.begin(), ov.end());
    std::sort(ev.begin(), ev.end());
    return ev;
}

OracleSpectrum exact_levels(const OscillatorParams& params, int n_levels, double rel_tol,
                            double basis_frequency) {
    params.validate();
    ANHO_REQUIRE(n_levels >= 1, "n_levels must be >= 1");
    OracleSpectrum os;
    os.params = params;
    os.basis_frequency =
        basis_frequency > 0.0 ? basis_frequency : solve_omega_bar(params, 0).omega_bar;

    std::vector<double> prev;
    int size = 64;
    constexpr int kCap = 2048;
    while (true) {
        const SymmetricMatrix h = hamiltonian_matrix(params, size, os.basis_frequency);
        std::vector<double> ev = parity_eigenvalues(h);
        ev.resize(static_cast<std::size_t>(n_levels));
        if (!prev.empty()) {
            double drift = 0.0;
            int stable = 0;
            bool leading = true;
            for (int i = 0; i < n_levels; ++i) {
                const double d = std::fabs(ev[i] - prev[i]) / std::fabs(ev[i]);
                drift = std::max(drift, d);
                if (leading && d <= rel_tol)
                    ++stable;
                else
                    leading = false;
            }
            os.basis_size = size;
            os.eigenvalues = ev;
            os.converged_count = stable;
            os.achieved_drift = drift;
            if (drift <= rel_tol) {
                os.converged = true;
                return os;
            }
            if (size >= kCap) {
                os.converged = false; // cap reached; caller sees the achieved drift
                return os;
            }
        }
        prev = std::move(ev);
        size = std::min(kCap, size + size / 2);
    }
}

} // namespace anho
