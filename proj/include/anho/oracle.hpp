#pragma once

// Reference spectrum: H represented in a harmonic-oscillator eigenbasis of
// adjustable frequency, diagonalized with cyclic Jacobi sweeps on the two
// parity blocks, with automatic basis growth until the low levels stop
// moving.

#include <vector>

#include "anho/quadrature.hpp"

namespace anho {

struct SymmetricMatrix {
    int n = 0;
    std::vector<double> a; // row-major, n*n

    explicit SymmetricMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0.0) {}
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

struct OracleSpectrum {
    OscillatorParams params;
    int basis_size = 0;
    double basis_frequency = 0.0;
    std::vector<double> eigenvalues; ///< ascending, lowest n_levels
    int converged_count = 0;
    bool converged = false;
    double achieved_drift = 0.0; ///< max relative drift at the final growth step
};

/// Matrix elements of H in the size-`basis_size` eigenbasis of frequency
/// `basis_frequency`. The x^{2m} block is the 2m-th power of the tridiagonal
/// position operator built in a basis padded by 2m rows, then truncated.
SymmetricMatrix hamiltonian_matrix(const OscillatorParams& params, int basis_size,
                                   double basis_frequency);

/// All eigenvalues of a dense symmetric matrix, ascending (cyclic Jacobi).
std::vector<double> jacobi_eigenvalues(SymmetricMatrix a);

/// Eigenvalues of `h` via the even/odd parity blocks, ascending. Asserts the
/// off-parity entries are exactly zero.
std::vector<double> parity_eigenvalues(const SymmetricMatrix& h);

/// Lowest `n_levels` eigenvalues with basis-growth drift <= rel_tol.
/// basis_frequency <= 0 selects the zero-temperature effective frequency.
OracleSpectrum exact_levels(const OscillatorParams& params, int n_levels, double rel_tol = 1e-9,
                            double basis_frequency = 0.0);

} // namespace anho
