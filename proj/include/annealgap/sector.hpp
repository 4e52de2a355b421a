#pragma once

#include <vector>

#include <Eigen/Core>

#include "annealgap/double_double.hpp"
#include "annealgap/tridiagonal.hpp"

namespace annealgap {

enum class Precision { Standard, Extended };

// Hamiltonian restricted to the maximal-angular-momentum sector: an
// (N+1)-dimensional symmetric tridiagonal operator indexed by m_z = -l..l
// with l = N/2. diag[j] = -N ((2 m_z)/N)^p, offdiag[j] = gamma sqrt(l(l+1) -
// m_z(m_z+1)).
TridiagonalOperator<double> build_sector_hamiltonian(int p, int n, double gamma);

// Same operator with entries carried in double-double; gamma may resolve
// finer than one double ulp, which matters when locating minima of
// exponentially narrow gap dips.
TridiagonalOperator<DoubleDouble> build_sector_hamiltonian_dd(int p, int n,
                                                              const DoubleDouble& gamma);

struct EigenResult {
    std::vector<double> values;          // lowest k eigenvalues, ascending
    std::vector<double> bracket_widths;  // certified interval width per value
    Precision precision;
    bool gap_resolved;  // lowest two brackets are disjoint (true when k < 2)
};

// k lowest eigenvalues by Sturm-count bisection. Standard mode certifies
// brackets to max(1e-13 * spectral_radius, requested_tol); extended mode
// re-runs the recurrence in double-double down to 1e-28 * spectral_radius.
EigenResult lowest_eigenvalues(const TridiagonalOperator<double>& T, int k, Precision precision,
                               double requested_tol = 0.0);

struct GapValue {
    double delta;
    bool resolved;  // false: gap below resolution at this precision
    double lambda0;
    double lambda1;
};

// Gap of the sector Hamiltonian, lambda_1 - lambda_0.
GapValue sector_gap(int p, int n, double gamma, Precision precision);

// Extended-precision gap with the field itself in double-double. The
// difference is taken between double-double brackets, so gaps far below
// one ulp of the eigenvalues survive.
struct GapValueDD {
    DoubleDouble delta;
    bool resolved;
};
GapValueDD sector_gap_dd(int p, int n, const DoubleDouble& gamma);

// Full 2^N spectrum of -N m (sigma^z)^p - gamma sum sigma^x by a dense
// symmetric eigensolver; validation oracle only, capped at N <= 14.
Eigen::VectorXd dense_spectrum_oracle(int p, int n, double gamma);

}  // namespace annealgap
