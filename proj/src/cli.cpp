#include "anho/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "anho/oracle.hpp"
#include "anho/partition.hpp"
#include "anho/spectrum.hpp"
#include "anho/validate.hpp"
#include "anho/version.hpp"

namespace anho::cli {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Either stdout or the configured file; CSV rows are assembled fully before
// writing so two runs with the same config are byte-identical.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void write_metadata(std::ostream& os, const std::string& command, const RunConfig& cfg) {
    os << "# anho " << kVersion << "\n";
    os << "# command: " << command << "\n";
    os << "# params: m=" << cfg.m << " omega=" << fmt(cfg.omega) << " n_max=" << cfg.n_max
       << " truncation=" << cfg.truncation << " oracle_tol=" << fmt(cfg.oracle_tol) << "\n";
}

struct SpectrumRow {
    double g = 0.0;
    bool failed = false;
    std::string error;
    std::vector<double> model, oracle;
    int oracle_basis = 0;
};

SpectrumRow spectrum_row(const RunConfig& cfg, double g) {
    SpectrumRow row;
    row.g = g;
    try {
        OscillatorParams p{cfg.omega, g, cfg.m};
        const SpectrumResult sr = extract_spectrum(p, cfg.n_max, cfg.truncation);
        const OracleSpectrum os = exact_levels(p, cfg.n_max + 1, cfg.oracle_tol);
        if (!os.converged)
            throw SolverError("oracle did not converge (drift " + fmt(os.achieved_drift) + ")");
        row.model = sr.levels;
        row.oracle = os.eigenvalues;
        row.oracle_basis = os.basis_size;
    } catch (const std::exception& e) {
        row.failed = true;
        row.error = e.what();
    }
    return row;
}

int emit_spectrum_rows(const RunConfig& cfg, const std::string& command,
                       const std::vector<double>& gs) {
    std::vector<SpectrumRow> rows(gs.size());
    validate::parallel_for(static_cast<int>(gs.size()), cfg.threads,
                           [&](int i) { rows[i] = spectrum_row(cfg, gs[i]); });
    int max_basis = 0;
    for (const SpectrumRow& row : rows) max_basis = std::max(max_basis, row.oracle_basis);
    OutputSink sink(cfg.output_path);
    std::ostream& os = sink.stream();
    bool any_failed = false;
    if (cfg.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const SpectrumRow& row : rows) {
            if (row.failed) {
                out.push_back({{"g", row.g}, {"error", row.error}});
                any_failed = true;
                continue;
            }
            for (int n = 0; n <= cfg.n_max; ++n) {
                const double rel =
                    std::fabs(row.model[n] - row.oracle[n]) / std::fabs(row.oracle[n]);
                out.push_back({{"m", cfg.m},
                               {"g", row.g},
                               {"omega", cfg.omega},
                               {"n", n},
                               {"E_model", row.model[n]},
                               {"E_oracle", row.oracle[n]},
                               {"rel_err", rel}});
            }
        }
        os << out.dump(2) << "\n";
    } else {
        write_metadata(os, command, cfg);
        os << "# oracle basis size: " << max_basis << "\n";
        os << "m,g,omega,n,E_model,E_oracle,rel_err\n";
        for (const SpectrumRow& row : rows) {
            if (row.failed) {
                os << "# FAILED g=" << fmt(row.g) << ": " << row.error << "\n";
                any_failed = true;
                continue;
            }
            for (int n = 0; n <= cfg.n_max; ++n) {
                const double rel =
                    std::fabs(row.model[n] - row.oracle[n]) / std::fabs(row.oracle[n]);
                os << cfg.m << ',' << fmt(row.g) << ',' << fmt(cfg.omega) << ',' << n << ','
                   << fmt(row.model[n]) << ',' << fmt(row.oracle[n]) << ',' << fmt(rel) << "\n";
            }
        }
    }
    return any_failed ? 1 : 0;
}

} // namespace

double GridSpec::at(int i) const {
    if (count == 1) return start;
    return start * std::pow(stop / start, static_cast<double>(i) / (count - 1));
}

void GridSpec::validate() const {
    ANHO_REQUIRE(count >= 1, "grid count must be >= 1");
    ANHO_REQUIRE(start <= stop, "grid start must not exceed stop");
    ANHO_REQUIRE(start > 0.0, "log-spaced grids need a positive start");
}

std::string figure_filename(int m) {
    switch (m) {
        case 2: return "fig_quartic.csv";
        case 3: return "fig_sextic.csv";
        case 4: return "fig_octic.csv";
        default: return "fig_m" + std::to_string(m) + ".csv";
    }
}

std::vector<FigureRow> compute_figure(const FigureSpec& spec) {
    spec.grid.validate();
    std::vector<FigureRow> rows(spec.grid.count);
    validate::parallel_for(spec.grid.count, spec.threads, [&](int i) {
        const double g = spec.grid.at(i);
        OscillatorParams p{spec.omega, g, spec.m};
        const SpectrumResult sr = extract_spectrum(p, spec.n_max, spec.truncation);
        const OracleSpectrum os = exact_levels(p, spec.n_max + 1, spec.oracle_tol);
        if (!os.converged) throw SolverError("figure oracle did not converge at g=" + fmt(g));
        rows[i] = FigureRow{g, sr.levels, os.eigenvalues, os.basis_size};
    });
    return rows;
}

void write_figure_csv(std::ostream& os, const FigureSpec& spec, const std::vector<FigureRow>& rows) {
    os << "# anho " << kVersion << "\n";
    os << "# command: figure\n";
    os << "# params: m=" << spec.m << " omega=" << fmt(spec.omega) << " n_max=" << spec.n_max
       << " truncation=" << spec.truncation << " oracle_tol=" << fmt(spec.oracle_tol) << "\n";
    os << "# g grid: log-spaced " << fmt(spec.grid.start) << ".." << fmt(spec.grid.stop) << " ("
       << spec.grid.count << " points)\n";
    int max_basis = 0;
    for (const FigureRow& row : rows) max_basis = std::max(max_basis, row.oracle_basis);
    os << "# oracle basis size: " << max_basis << "\n";
    os << "# gnuplot: set datafile separator ','; plot for [n=2:10] 'file' using 1:n with lines, "
          "for [n=11:19] '' using 1:n with points\n";
    os << "g";
    for (int n = 0; n <= spec.n_max; ++n) os << ",model_E" << n;
    for (int n = 0; n <= spec.n_max; ++n) os << ",oracle_E" << n;
    os << "\n";
    for (const FigureRow& row : rows) {
        os << fmt(row.g);
        for (double v : row.model) os << ',' << fmt(v);
        for (double v : row.oracle) os << ',' << fmt(v);
        os << "\n";
    }
}

int cmd_spectrum(const RunConfig& cfg) {
    std::vector<double> gs;
    if (cfg.g_is_grid) {
        cfg.g_grid.validate();
        for (int i = 0; i < cfg.g_grid.count; ++i) gs.push_back(cfg.g_grid.at(i));
    } else {
        gs.push_back(cfg.g);
    }
    return emit_spectrum_rows(cfg, "spectrum", gs);
}

int cmd_sweep(const RunConfig& cfg) {
    cfg.g_grid.validate();
    std::vector<double> gs;
    for (int i = 0; i < cfg.g_grid.count; ++i) gs.push_back(cfg.g_grid.at(i));
    return emit_spectrum_rows(cfg, "sweep", gs);
}

int cmd_zeval(const RunConfig& cfg) {
    std::vector<double> betas;
    if (cfg.beta_is_grid) {
        cfg.beta_grid.validate();
        for (int i = 0; i < cfg.beta_grid.count; ++i) betas.push_back(cfg.beta_grid.at(i));
    } else {
        betas.push_back(cfg.beta);
    }
    OscillatorParams p{cfg.omega, cfg.g, cfg.m};
    struct Row {
        double beta;
        bool failed = false;
        std::string error;
        PartitionEvaluation pe;
    };
    std::vector<Row> rows(betas.size());
    validate::parallel_for(static_cast<int>(betas.size()), cfg.threads, [&](int i) {
        rows[i].beta = betas[i];
        try {
            rows[i].pe = model_partition(p, betas[i]);
        } catch (const std::exception& e) {
            rows[i].failed = true;
            rows[i].error = e.what();
        }
    });
    OutputSink sink(cfg.output_path);
    std::ostream& os = sink.stream();
    bool any_failed = false;
    double prev_nc = 0.0;
    bool monotone = true;
    if (cfg.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const Row& r : rows) {
            if (r.failed) {
                out.push_back({{"beta", r.beta}, {"error", r.error}});
                any_failed = true;
                continue;
            }
            out.push_back({{"beta", r.beta},
                           {"Z", r.pe.z_value},
                           {"free_energy", r.pe.free_energy},
                           {"n_c", r.pe.thermal.n_c},
                           {"tau_c", r.pe.thermal.tau_c},
                           {"omega_g", r.pe.thermal.omega_g_beta}});
        }
        os << out.dump(2) << "\n";
    } else {
        write_metadata(os, "zeval", cfg);
        os << "# g=" << fmt(cfg.g) << "\n";
        os << "beta,Z,free_energy,n_c,tau_c,omega_g\n";
        for (const Row& r : rows) {
            if (r.failed) {
                os << "# FAILED beta=" << fmt(r.beta) << ": " << r.error << "\n";
                any_failed = true;
                continue;
            }
            os << fmt(r.beta) << ',' << fmt(r.pe.z_value) << ',' << fmt(r.pe.free_energy) << ','
               << fmt(r.pe.thermal.n_c) << ',' << fmt(r.pe.thermal.tau_c) << ','
               << fmt(r.pe.thermal.omega_g_beta) << "\n";
        }
    }
    for (const Row& r : rows) {
        if (r.failed) continue;
        if (r.pe.thermal.n_c < 1.0 - 1e-12 || r.pe.thermal.n_c < prev_nc) monotone = false;
        prev_nc = r.pe.thermal.n_c;
    }
    if (!monotone) {
        std::cerr << "zeval: PMS index n_c is not >= 1 and increasing over the beta grid\n";
        return 1;
    }
    return any_failed ? 1 : 0;
}

int cmd_figure(const RunConfig& cfg) {
    ANHO_REQUIRE(cfg.m >= 2 && cfg.m <= 4, "figure command covers m in {2,3,4}");
    FigureSpec spec;
    spec.m = cfg.m;
    spec.omega = cfg.omega;
    spec.grid = cfg.g_grid;
    spec.n_max = cfg.n_max;
    spec.truncation = cfg.truncation;
    spec.oracle_tol = cfg.oracle_tol;
    spec.threads = cfg.threads;
    try {
        const std::vector<FigureRow> rows = compute_figure(spec);
        const std::string path =
            cfg.output_path.empty() ? figure_filename(cfg.m) : cfg.output_path;
        std::ofstream os(path);
        if (!os) throw std::runtime_error("cannot open output file: " + path);
        write_figure_csv(os, spec, rows);
        std::cout << "wrote " << path << " (" << rows.size() << " grid points)\n";
    } catch (const std::exception& e) {
        std::cerr << "figure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cmd_validate(const RunConfig& cfg) {
    validate::ValidationConfig vc;
    vc.oracle_tol = cfg.oracle_tol;
    vc.quick = cfg.quick;
    vc.threads = cfg.threads;
    if (validate::oracle_degraded(vc))
        std::cout << "WARNING: degraded oracle tolerance " << fmt(cfg.oracle_tol)
                  << " (nominal 1e-09); oracle comparisons are weaker than the suite's default\n";
    const std::vector<validate::CriterionResult> results = validate::run_acceptance(vc);
    bool all_ok = true;
    for (const validate::CriterionResult& r : results) {
        std::printf("[%s] criterion %2d: %-42s (%.1fs) %s\n", r.passed ? "PASS" : "FAIL", r.index,
                    r.name.c_str(), r.seconds, r.details.c_str());
        all_ok = all_ok && r.passed;
    }
    std::printf("%zu/%zu criteria passed\n",
                static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                                       [](const auto& r) { return r.passed; })),
                results.size());
    return all_ok ? 0 : 1;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"anharmonic-oscillator model spectrum toolkit"};
    app.set_version_flag("--version", std::string("anho ") + kVersion);
    app.require_subcommand(1);

    RunConfig cfg;
    double g_start = 1e-2, g_stop = 1e3;
    int g_count = 40;
    double beta_start = 0.1, beta_stop = 50.0;
    int beta_count = 25;

    auto add_common = [&](CLI::App* sub, bool wants_beta) {
        sub->add_option("--m", cfg.m, "anharmonicity exponent (2, 3 or 4)");
        sub->add_option("--omega", cfg.omega, "harmonic frequency")->capture_default_str();
        sub->add_option("--n-max", cfg.n_max, "highest level")->capture_default_str();
        sub->add_option("--truncation", cfg.truncation, "series truncation order")
            ->capture_default_str();
        sub->add_option("--oracle-tol", cfg.oracle_tol, "oracle basis-drift tolerance")
            ->capture_default_str();
        sub->add_option("--output", cfg.output_path, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--threads", cfg.threads, "worker threads (0: ANHO_THREADS or all cores)");
        sub->add_option("--g", cfg.g, "coupling constant");
        sub->add_option("--g-start", g_start, "g grid start");
        sub->add_option("--g-stop", g_stop, "g grid stop");
        sub->add_option("--g-count", g_count, "g grid point count");
        if (wants_beta) {
            sub->add_option("--beta", cfg.beta, "inverse temperature");
            sub->add_option("--beta-start", beta_start, "beta grid start");
            sub->add_option("--beta-stop", beta_stop, "beta grid stop");
            sub->add_option("--beta-count", beta_count, "beta grid point count");
        }
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "model vs oracle energy levels");
    add_common(spectrum, false);
    CLI::App* sweep = app.add_subcommand("sweep", "spectrum over a log-spaced coupling grid");
    add_common(sweep, false);
    CLI::App* zeval = app.add_subcommand("zeval", "partition function over a beta grid");
    add_common(zeval, true);
    CLI::App* figure = app.add_subcommand("figure", "CSV data behind the level figures");
    add_common(figure, false);
    CLI::App* validate_cmd = app.add_subcommand("validate", "run the acceptance suite");
    add_common(validate_cmd, false);
    validate_cmd->add_flag("--quick", cfg.quick, "small subset: harmonic, Q polynomials, consistency");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (spectrum->parsed()) {
            cfg.g_is_grid = spectrum->count("--g-start") || spectrum->count("--g-count");
            cfg.g_grid = {g_start, g_stop, g_count};
            return cmd_spectrum(cfg);
        }
        if (sweep->parsed()) {
            cfg.g_grid = {g_start, g_stop, g_count};
            return cmd_sweep(cfg);
        }
        if (zeval->parsed()) {
            cfg.beta_is_grid = !zeval->count("--beta");
            cfg.beta_grid = {beta_start, beta_stop, beta_count};
            return cmd_zeval(cfg);
        }
        if (figure->parsed()) {
            cfg.g_grid = {g_start, g_stop, g_count};
            return cmd_figure(cfg);
        }
        if (validate_cmd->parsed()) return cmd_validate(cfg);
    } catch (const std::exception& e) {
        std::cerr << argv[0] << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace anho::cli
