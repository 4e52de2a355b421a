#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "annealgap/double_double.hpp"

namespace annealgap {

// Symmetric tridiagonal operator, templated on the scalar so the same
// machinery runs in double or double-double precision.
template <class Scalar>
struct TridiagonalOperator {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> diag;     // n entries
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> offdiag;  // n-1 entries

    Eigen::Index dim() const { return diag.size(); }
};

template <class Scalar>
struct Bracket {
    Scalar lo, hi;
    Scalar width() const { return hi - lo; }
    Scalar mid() const { return (lo + hi) * Scalar(0.5); }
};

namespace detail {

inline double scalar_abs(double x) { return std::fabs(x); }
inline DoubleDouble scalar_abs(const DoubleDouble& x) { return abs(x); }
inline double to_dbl(double x) { return x; }
inline double to_dbl(const DoubleDouble& x) { return x.to_double(); }

}  // namespace detail

// Number of eigenvalues strictly below x, from the signed LDL^T pivot
// recurrence (Sturm count). The pivot is clamped away from zero so a hit on
// an exact eigenvalue of a leading submatrix cannot produce a zero divide.
template <class Scalar>
int sturm_count(const TridiagonalOperator<Scalar>& T, const Scalar& x) {
    const Eigen::Index n = T.dim();
    const Scalar pivmin(1e-290);
    int count = 0;
    Scalar d = T.diag[0] - x;
    if (detail::scalar_abs(d) < pivmin) d = -pivmin;
    if (d < Scalar(0.0)) ++count;
    for (Eigen::Index i = 1; i < n; ++i) {
        d = T.diag[i] - x - T.offdiag[i - 1] * T.offdiag[i - 1] / d;
        if (detail::scalar_abs(d) < pivmin) d = -pivmin;
        if (d < Scalar(0.0)) ++count;
    }
    return count;
}

// Gershgorin interval certainly containing the whole spectrum.
template <class Scalar>
Bracket<Scalar> spectral_bounds(const TridiagonalOperator<Scalar>& T) {
    const Eigen::Index n = T.dim();
    Scalar lo, hi;
    for (Eigen::Index i = 0; i < n; ++i) {
        Scalar r(0.0);
        if (i > 0) r += detail::scalar_abs(T.offdiag[i - 1]);
        if (i + 1 < n) r += detail::scalar_abs(T.offdiag[i]);
        Scalar a = T.diag[i] - r, b = T.diag[i] + r;
        if (i == 0 || a < lo) lo = a;
        if (i == 0 || hi < b) hi = b;
    }
    return {lo, hi};
}

// Bisects the k-th smallest eigenvalue (k = 0 based) down to the requested
// bracket width. The returned bracket certifies count(lo) <= k < count(hi).
template <class Scalar>
Bracket<Scalar> bisect_eigenvalue(const TridiagonalOperator<Scalar>& T, int k,
                                  Bracket<Scalar> bracket, const Scalar& tol) {
    while (bracket.width() > tol) {
        Scalar mid = bracket.mid();
        if (mid <= bracket.lo || bracket.hi <= mid) break;  // scalar resolution floor
        if (sturm_count(T, mid) >= k + 1)
            bracket.hi = mid;
        else
            bracket.lo = mid;
    }
    return bracket;
}

// Brackets for the k lowest eigenvalues from a shared Gershgorin enclosure.
template <class Scalar>
std::vector<Bracket<Scalar>> bisect_lowest(const TridiagonalOperator<Scalar>& T, int k,
                                           const Scalar& tol) {
    Bracket<Scalar> outer = spectral_bounds(T);
    std::vector<Bracket<Scalar>> out;
    out.reserve(k);
    for (int j = 0; j < k; ++j) {
        Bracket<Scalar> b = outer;
        if (j > 0) b.lo = out[j - 1].lo;  // eigenvalues are ordered
        out.push_back(bisect_eigenvalue(T, j, b, tol));
    }
    return out;
}

}  // namespace annealgap
