#include "annealgap/grover.hpp"

#include <cmath>
#include <vector>

#include "annealgap/errors.hpp"

namespace annealgap {

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

namespace {

// w_k = (N / 2^N) C(N, k), computed in log space.
std::vector<double> level_weights(int n) {
    std::vector<double> w(n + 1);
    double shift = std::log(double(n)) - n * std::log(2.0);
    for (int k = 0; k <= n; ++k) w[k] = std::exp(log_binomial(n, k) + shift);
    return w;
}

double kahan_sum_terms(const std::vector<double>& terms) {
    double s = 0.0, c = 0.0;
    for (double t : terms) {
        double y = t - c;
        double u = s + y;
        c = (u - s) - y;
        s = u;
    }
    return s;
}

// lhs in the offset coordinate eta = lambda + gamma N. The pole formerly at
// lambda = -gamma N sits exactly at eta = 0, so tiny splittings suffer no
// cancellation. Poles: eta = 2 gamma (N - k).
double lhs_eta(int n, double gamma, const std::vector<double>& w, double eta) {
    std::vector<double> terms(n + 1);
    for (int k = 0; k <= n; ++k) terms[k] = w[k] / (2.0 * gamma * (n - k) - eta);
    return kahan_sum_terms(terms);
}

}  // namespace

double dispersion_lhs(int n, double gamma, double lambda) {
    if (n < 1) throw SpecError(SpecError::Kind::InvalidSize, "need N >= 1");
    auto w = level_weights(n);
    std::vector<double> terms(n + 1);
    for (int k = 0; k <= n; ++k) {
        double denom = gamma * (n - 2.0 * k) - lambda;
        if (std::fabs(denom) < 1e-300)
            throw DomainError("dispersion evaluated at a pole of the secular equation");
        terms[k] = w[k] / denom;
    }
    return kahan_sum_terms(terms);
}

namespace {

// Root of above(x) switching false -> true on (lo, hi), 0 < lo < hi.
// Geometric bisection first (resolves roots spanning hundreds of decades),
// then arithmetic refinement.
template <class AboveRoot>
double solve_positive_root(double lo, double hi, AboveRoot above) {
    for (int it = 0; it < 150 && hi > lo; ++it) {
        double mid = (hi / lo > 4.0) ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (above(mid))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

LevelPair lowest_two_levels(int n, double gamma) {
    if (n < 2) throw SpecError(SpecError::Kind::InvalidSize, "need N >= 2");
    if (!(gamma > 0.0)) throw SpecError(SpecError::Kind::InvalidField, "need gamma > 0");
    auto w = level_weights(n);

    // eta0 < 0: write eta = -t, t > 0. lhs(-t) decreases in t from +infinity
    // to 0, so the unique root is bracketed by doubling t upward.
    double t_hi = 1.0;
    while (lhs_eta(n, gamma, w, -t_hi) > 1.0) {
        t_hi *= 2.0;
        if (t_hi > 1e12) throw ConvergenceError("no split-off root found", -t_hi, 0.0);
    }
    double t0 = solve_positive_root(1e-300, t_hi, [&](double t) {
        return lhs_eta(n, gamma, w, -t) < 1.0;
    });
    double eta0 = -t0;

    // eta1 in (0, 2 gamma): lhs runs monotonically from -infinity to
    // +infinity between the eta = 0 and eta = 2 gamma poles.
    double eta1 = solve_positive_root(1e-300, 2.0 * gamma * (1.0 - 1e-15), [&](double eta) {
        return lhs_eta(n, gamma, w, eta) > 1.0;
    });

    LevelPair out;
    out.eta = eta0;
    out.lambda0 = -gamma * n + eta0;
    out.lambda1 = -gamma * n + eta1;
    return out;
}

double min_gap_asymptotic(int n) {
    if (n < 1) throw SpecError(SpecError::Kind::InvalidSize, "need N >= 1");
    return 2.0 * n * std::exp2(-0.5 * n);
}

double perturbative_gs_energy(int n, double gamma) {
    if (gamma == 1.0)
        throw DomainError("perturbation theory breaks at the transition; use lowest_two_levels");
    if (gamma < 1.0) return -double(n) - gamma * gamma;
    return -gamma * n;
}

std::pair<double, double> grover_min_gap(int n) {
    auto gap_at = [&](double g) {
        LevelPair lp = lowest_two_levels(n, g);
        return lp.gap();
    };
    // The avoided crossing sits at gamma = 1 + O(1/N); the dip is unimodal
    // well inside this window.
    double a = 0.97, b = 1.0 + 6.0 / std::sqrt(double(n));
    const double gr = 0.6180339887498949;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = gap_at(c), fd = gap_at(d);
    while (b - a > 1e-11) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = gap_at(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = gap_at(d);
        }
    }
    double g = 0.5 * (a + b);
    return {g, gap_at(g)};
}

}  // namespace annealgap
