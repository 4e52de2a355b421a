#include "annealgap/sector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "annealgap/errors.hpp"
#include "annealgap/model.hpp"

namespace annealgap {

namespace {

// (2 m_z)/N for slot j is (2j - N)/N; both factors exact in double.
double diag_entry(int p, int n, int j) {
    double s = double(2 * j - n) / n;
    double mag = std::pow(std::fabs(s), p);
    return -n * (s < 0.0 ? -mag : mag);
}

// l(l+1) - m_z(m_z+1) = (N(N+2) - (2j-N)(2j-N+2))/4, an exact quarter-integer.
double coupling_arg(int n, int j) {
    double t = double(2 * j - n);
    return (double(n) * (n + 2) - t * (t + 2.0)) * 0.25;
}

DoubleDouble dd_pow(const DoubleDouble& x, int e) {
    DoubleDouble acc(1.0);
    DoubleDouble base = x;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        base *= base;
    }
    return acc;
}

}  // namespace

TridiagonalOperator<double> build_sector_hamiltonian(int p, int n, double gamma) {
    validate_spec({p, n, gamma, 1.0});
    if (n < 2) throw SpecError(SpecError::Kind::InvalidSize, "sector Hamiltonian needs N >= 2");
    TridiagonalOperator<double> T;
    T.diag.resize(n + 1);
    T.offdiag.resize(n);
    for (int j = 0; j <= n; ++j) T.diag[j] = diag_entry(p, n, j);
    for (int j = 0; j < n; ++j) T.offdiag[j] = gamma * std::sqrt(coupling_arg(n, j));
    return T;
}

TridiagonalOperator<DoubleDouble> build_sector_hamiltonian_dd(int p, int n,
                                                              const DoubleDouble& gamma) {
    validate_spec({p, n, gamma.to_double(), 1.0});
    if (n < 2) throw SpecError(SpecError::Kind::InvalidSize, "sector Hamiltonian needs N >= 2");
    TridiagonalOperator<DoubleDouble> T;
    T.diag.resize(n + 1);
    T.offdiag.resize(n);
    for (int j = 0; j <= n; ++j) {
        DoubleDouble s = DoubleDouble(double(2 * j - n)) / DoubleDouble(double(n));
        DoubleDouble mag = dd_pow(abs(s), p);
        T.diag[j] = DoubleDouble(double(-n)) * (s.hi() < 0.0 ? -mag : mag);
    }
    for (int j = 0; j < n; ++j) T.offdiag[j] = gamma * sqrt(DoubleDouble(coupling_arg(n, j)));
    return T;
}

namespace {

template <class Scalar>
std::vector<Bracket<Scalar>> certified_brackets(const TridiagonalOperator<Scalar>& T, int k,
                                                double rel_tol, double requested_tol) {
    Bracket<Scalar> outer = spectral_bounds(T);
    double radius = std::max(std::fabs(detail::to_dbl(outer.lo)), std::fabs(detail::to_dbl(outer.hi)));
    Scalar tol(std::max(rel_tol * radius, requested_tol));
    return bisect_lowest(T, k, tol);
}

TridiagonalOperator<DoubleDouble> promote(const TridiagonalOperator<double>& T) {
    TridiagonalOperator<DoubleDouble> U;
    U.diag.resize(T.diag.size());
    U.offdiag.resize(T.offdiag.size());
    for (Eigen::Index i = 0; i < T.diag.size(); ++i) U.diag[i] = DoubleDouble(T.diag[i]);
    for (Eigen::Index i = 0; i < T.offdiag.size(); ++i) U.offdiag[i] = DoubleDouble(T.offdiag[i]);
    return U;
}

template <class Scalar>
EigenResult pack_result(const std::vector<Bracket<Scalar>>& brackets, Precision precision) {
    EigenResult res;
    res.precision = precision;
    res.gap_resolved = true;
    for (const auto& b : brackets) {
        res.values.push_back(detail::to_dbl(b.mid()));
        res.bracket_widths.push_back(detail::to_dbl(b.width()));
    }
    if (brackets.size() >= 2)
        res.gap_resolved = detail::to_dbl(brackets[1].lo - brackets[0].hi) > 0.0;
    return res;
}

}  // namespace

EigenResult lowest_eigenvalues(const TridiagonalOperator<double>& T, int k, Precision precision,
                               double requested_tol) {
    if (k < 1 || k > T.dim())
        throw SpecError(SpecError::Kind::InvalidSize,
                        "eigenvalue count k must be in [1, dim], got " + std::to_string(k));
    if (precision == Precision::Standard)
        return pack_result(certified_brackets(T, k, 1e-13, requested_tol), precision);
    return pack_result(certified_brackets(promote(T), k, 1e-28, requested_tol), precision);
}

GapValue sector_gap(int p, int n, double gamma, Precision precision) {
    auto T = build_sector_hamiltonian(p, n, gamma);
    if (precision == Precision::Standard) {
        auto br = certified_brackets(T, 2, 1e-13, 0.0);
        double delta = std::max(0.0, br[1].mid() - br[0].mid());
        bool resolved = br[1].lo - br[0].hi > 0.0;
        return {delta, resolved, br[0].mid(), br[1].mid()};
    }
    auto br = certified_brackets(promote(T), 2, 1e-28, 0.0);
    double delta = std::max(0.0, (br[1].mid() - br[0].mid()).to_double());
    bool resolved = (br[1].lo - br[0].hi).hi() > 0.0;
    return {delta, resolved, br[0].mid().to_double(), br[1].mid().to_double()};
}

GapValueDD sector_gap_dd(int p, int n, const DoubleDouble& gamma) {
    auto T = build_sector_hamiltonian_dd(p, n, gamma);
    auto brackets = certified_brackets(T, 2, 1e-28, 0.0);
    GapValueDD out;
    out.delta = brackets[1].mid() - brackets[0].mid();
    if (out.delta.hi() < 0.0) out.delta = DoubleDouble(0.0);
    out.resolved = (brackets[1].lo - brackets[0].hi).hi() > 0.0;
    return out;
}

Eigen::VectorXd dense_spectrum_oracle(int p, int n, double gamma) {
    if (n < 1 || n > 14)
        throw SpecError(SpecError::Kind::InvalidSize, "dense oracle limited to 1 <= N <= 14");
    validate_spec({p, n, gamma, 1.0});
    const int dim = 1 << n;
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
    for (int s = 0; s < dim; ++s) {
        double m = double(n - 2 * std::popcount(unsigned(s))) / n;
        double mag = std::pow(std::fabs(m), p);
        H(s, s) = -n * (m < 0.0 ? -mag : mag);
        for (int b = 0; b < n; ++b) H(s, s ^ (1 << b)) = -gamma;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

}  // namespace annealgap
