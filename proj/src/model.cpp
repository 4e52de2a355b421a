#include "annealgap/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace annealgap {

ModelSpec validate_spec(const ModelSpec& spec) {
    if (spec.p != kPInfinity) {
        if (spec.p < 3)
            throw SpecError(SpecError::Kind::UnsupportedInteractionOrder,
                            "unsupported interaction order p=" + std::to_string(spec.p) +
                                " (need odd p >= 3 or infinity)");
        if (spec.p % 2 == 0)
            throw SpecError(SpecError::Kind::UnsupportedInteractionOrder,
                            "unsupported interaction order: even p=" + std::to_string(spec.p));
    }
    if (spec.n_sites < 1)
        throw SpecError(SpecError::Kind::InvalidSize,
                        "system size must be >= 1, got " + std::to_string(spec.n_sites));
    if (!(spec.gamma >= 0.0))
        throw SpecError(SpecError::Kind::InvalidField, "transverse field must be >= 0");
    if (!(spec.beta > 0.0))
        throw SpecError(SpecError::Kind::InvalidTemperature, "inverse temperature must be > 0");
    return spec;
}

double gs_energy_density(int p, double gamma, double m) {
    double h = p * std::pow(m, p - 1);
    return (p - 1) * std::pow(m, p) - std::hypot(gamma, h);
}

double gs_energy_density_dm(int p, double gamma, double m) {
    // p(p-1) m^(p-2) * (m - h/r) with h = p m^(p-1), r = sqrt(gamma^2 + h^2).
    double h = p * std::pow(m, p - 1);
    double r = std::hypot(gamma, h);
    return p * (p - 1) * std::pow(m, p - 2) * (m - h / r);
}

namespace {

// Locates the ferromagnetic local minimum of e(m) on (0.5, 1].
//
// e(m) is not unimodal for large p: a nearly flat region at small m, a
// barrier, and a sharp dip approaching m = 1. A plain golden section
// collapses onto the flat region, and picking the global grid minimum fails
// right at the degenerate field where the two phases tie. Instead we take
// the rightmost sign change (- to +) of de/dm over a grid that crowds extra
// points into the O(1/p^2) neighbourhood of m = 1, then bisect de/dm.
// Returns false when no ferromagnetic minimum exists at this field.
bool ferro_minimum(int p, double gamma, double& m_out, double& e_out) {
    std::vector<double> grid;
    const int n_uniform = 800;
    grid.reserve(n_uniform + 17);
    for (int i = 0; i <= n_uniform; ++i)
        grid.push_back(0.5 + 0.5 * i / n_uniform);
    for (int k = 16; k >= 1; --k) {
        double m = 1.0 - double(k) / (8.0 * double(p) * p);
        if (m > 0.5) grid.push_back(m);
    }
    std::sort(grid.begin(), grid.end());

    double lo = -1.0, hi = -1.0;
    double d_prev = gs_energy_density_dm(p, gamma, grid.front());
    for (std::size_t i = 1; i < grid.size(); ++i) {
        double d = gs_energy_density_dm(p, gamma, grid[i]);
        if (d_prev < 0.0 && d >= 0.0) {
            lo = grid[i - 1];
            hi = grid[i];
        }
        d_prev = d;
    }
    if (lo < 0.0) {
        // Derivative never turns positive: minimum sits at the boundary m=1.
        if (d_prev < 0.0) {
            m_out = 1.0;
            e_out = gs_energy_density(p, gamma, 1.0);
            return true;
        }
        return false;
    }
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        if (gs_energy_density_dm(p, gamma, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    m_out = 0.5 * (lo + hi);
    e_out = gs_energy_density(p, gamma, m_out);
    return true;
}

}  // namespace

CriticalPoint zero_T_critical_point(int p) {
    if (p < 3 || p % 2 == 0 || p > 1001)
        throw SpecError(SpecError::Kind::UnsupportedInteractionOrder,
                        "critical point requires odd p in [3, 1001]");

    // Outer bisection on gamma in [1, 2]: the ferromagnetic minimum lies
    // below the paramagnetic value -gamma for gamma < gamma_c and above it
    // beyond. The bracket is guaranteed for p >= 3.
    double glo = 1.0, ghi = 2.0;
    double m_c = 1.0, e_ferro = 0.0;
    const double tol = 1e-12;
    int it = 0;
    for (; it < 200 && ghi - glo > tol; ++it) {
        double g = 0.5 * (glo + ghi);
        double m, e;
        bool ok = ferro_minimum(p, g, m, e);
        if (ok && e < -g) {
            glo = g;
            m_c = m;
        } else {
            ghi = g;
        }
    }
    if (ghi - glo > tol)
        throw ConvergenceError("critical-field bisection did not converge", glo, ghi);
    double gamma_c = 0.5 * (glo + ghi);
    if (!ferro_minimum(p, gamma_c, m_c, e_ferro))
        throw ConvergenceError("ferromagnetic minimum lost at the critical field", glo, ghi);
    return {gamma_c, m_c};
}

CriticalPoint asymptotic_critical_point(int p) {
    if (p == kPInfinity) return {1.0, 1.0};
    if (p < 3)
        throw SpecError(SpecError::Kind::UnsupportedInteractionOrder,
                        "asymptotic critical point requires p >= 3");
    double pd = p;
    return {1.0 + 1.0 / (2.0 * pd), 1.0 - 1.0 / (2.0 * pd * pd)};
}

}  // namespace annealgap
