#pragma once

// Command-line front end: spectra, partition-function evaluation, coupling
// sweeps, figure data, and the validation suite.

#include <iosfwd>
#include <string>
#include <vector>

namespace anho::cli {

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    /// log-spaced grid point i of count
    double at(int i) const;
    void validate() const;
};

struct RunConfig {
    std::string command;
    int m = 2;
    double omega = 1.0;
    double g = 1.0;
    GridSpec g_grid{1e-2, 1e3, 40};
    bool g_is_grid = false;
    int n_max = 8;
    double beta = 1.0;
    GridSpec beta_grid{0.1, 50.0, 25};
    bool beta_is_grid = false;
    int truncation = 12;
    double oracle_tol = 1e-9;
    std::string output_path; ///< empty: stdout
    std::string format = "csv";
    bool quick = false;
    int threads = 0;
};

struct FigureSpec {
    int m = 2;
    double omega = 1.0;
    GridSpec grid{1e-2, 1e3, 40};
    int n_max = 8;
    int truncation = 12;
    double oracle_tol = 1e-9;
    int threads = 0;
};

struct FigureRow {
    double g = 0.0;
    std::vector<double> model;  ///< E_0 .. E_n_max
    std::vector<double> oracle;
    int oracle_basis = 0;
};

std::vector<FigureRow> compute_figure(const FigureSpec& spec);
void write_figure_csv(std::ostream& os, const FigureSpec& spec, const std::vector<FigureRow>& rows);
std::string figure_filename(int m);

int cmd_spectrum(const RunConfig& cfg);
int cmd_zeval(const RunConfig& cfg);
int cmd_sweep(const RunConfig& cfg);
int cmd_figure(const RunConfig& cfg);
int cmd_validate(const RunConfig& cfg);

/// Parse argv and dispatch. Returns the process exit status.
int run(int argc, const char* const* argv);

} // namespace anho::cli
