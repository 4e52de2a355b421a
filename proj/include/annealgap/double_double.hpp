#pragma once

#include <cmath>
#include <limits>

#include <Eigen/Core>

namespace annealgap {

// Double-double scalar: an unevaluated sum hi + lo with |lo| <= ulp(hi)/2,
// giving roughly 32 significant decimal digits. Only the operations needed
// by the extended-precision Sturm recurrence and the critical-field search
// are provided. Algorithms follow Dekker/Knuth error-free transformations.
class DoubleDouble {
public:
    constexpr DoubleDouble() : hi_(0.0), lo_(0.0) {}
    constexpr DoubleDouble(double x) : hi_(x), lo_(0.0) {}
    constexpr DoubleDouble(double hi, double lo) : hi_(hi), lo_(lo) {}

    double hi() const { return hi_; }
    double lo() const { return lo_; }
    double to_double() const { return hi_ + lo_; }

    DoubleDouble operator-() const { return {-hi_, -lo_}; }

    friend DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
        double s1, s2, t1, t2;
        s1 = two_sum(a.hi_, b.hi_, s2);
        t1 = two_sum(a.lo_, b.lo_, t2);
        s2 += t1;
        s1 = quick_two_sum(s1, s2, s2);
        s2 += t2;
        s1 = quick_two_sum(s1, s2, s2);
        return {s1, s2};
    }

    friend DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) {
        return a + (-b);
    }

    friend DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
        double p2;
        double p1 = two_prod(a.hi_, b.hi_, p2);
        p2 += a.hi_ * b.lo_ + a.lo_ * b.hi_;
        p1 = quick_two_sum(p1, p2, p2);
        return {p1, p2};
    }

    friend DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
        double q1 = a.hi_ / b.hi_;
        DoubleDouble r = a - b * DoubleDouble(q1);
        double q2 = r.hi_ / b.hi_;
        r = r - b * DoubleDouble(q2);
        double q3 = r.hi_ / b.hi_;
        double s2;
        double s1 = quick_two_sum(q1, q2, s2);
        DoubleDouble q(s1, s2);
        return q + DoubleDouble(q3);
    }

    DoubleDouble& operator+=(const DoubleDouble& o) { return *this = *this + o; }
    DoubleDouble& operator-=(const DoubleDouble& o) { return *this = *this - o; }
    DoubleDouble& operator*=(const DoubleDouble& o) { return *this = *this * o; }
    DoubleDouble& operator/=(const DoubleDouble& o) { return *this = *this / o; }

    friend bool operator<(const DoubleDouble& a, const DoubleDouble& b) {
        return a.hi_ < b.hi_ || (a.hi_ == b.hi_ && a.lo_ < b.lo_);
    }
    friend bool operator>(const DoubleDouble& a, const DoubleDouble& b) { return b < a; }
    friend bool operator<=(const DoubleDouble& a, const DoubleDouble& b) { return !(b < a); }
    friend bool operator>=(const DoubleDouble& a, const DoubleDouble& b) { return !(a < b); }
    friend bool operator==(const DoubleDouble& a, const DoubleDouble& b) {
        return a.hi_ == b.hi_ && a.lo_ == b.lo_;
    }
    friend bool operator!=(const DoubleDouble& a, const DoubleDouble& b) { return !(a == b); }

private:
    static double quick_two_sum(double a, double b, double& err) {
        double s = a + b;
        err = b - (s - a);
        return s;
    }
    static double two_sum(double a, double b, double& err) {
        double s = a + b;
        double bb = s - a;
        err = (a - (s - bb)) + (b - bb);
        return s;
    }
    static double two_prod(double a, double b, double& err) {
        double p = a * b;
        err = std::fma(a, b, -p);
        return p;
    }

    double hi_, lo_;
};

inline DoubleDouble abs(const DoubleDouble& a) {
    return a.hi() < 0.0 || (a.hi() == 0.0 && a.lo() < 0.0) ? -a : a;
}

inline DoubleDouble sqrt(const DoubleDouble& a) {
    if (a.hi() == 0.0) return {0.0, 0.0};
    // Karp's method: one Newton correction on the double-precision root.
    double x = std::sqrt(a.hi());
    DoubleDouble xdd(x);
    DoubleDouble corr = (a - xdd * xdd) / DoubleDouble(2.0 * x);
    return xdd + corr;
}

inline DoubleDouble mul_pwr2(const DoubleDouble& a, double p) {
    return {a.hi() * p, a.lo() * p};  // p must be a power of two
}

}  // namespace annealgap

namespace Eigen {

// Minimal traits so DoubleDouble can live in Eigen dense containers.
template <>
struct NumTraits<annealgap::DoubleDouble> : GenericNumTraits<annealgap::DoubleDouble> {
    typedef annealgap::DoubleDouble Real;
    typedef annealgap::DoubleDouble NonInteger;
    typedef annealgap::DoubleDouble Nested;
    static inline Real epsilon() { return {4.93e-32, 0.0}; }
    static inline Real dummy_precision() { return {1e-28, 0.0}; }
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 0,
        ReadCost = 2,
        AddCost = 6,
        MulCost = 8
    };
};

}  // namespace Eigen
