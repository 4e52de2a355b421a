#pragma once

#include <string>
#include <utility>
#include <vector>

#include "annealgap/sector.hpp"

namespace annealgap {

struct GapPoint {
    double gamma;
    double delta;
    bool resolved;
};

struct GapCurve {
    int p;
    int n;
    std::vector<GapPoint> points;  // sorted by gamma
};

// Gap on a uniform field grid; unresolved points are flagged, never dropped.
GapCurve gamma_scan(int p, int n, double gamma_lo, double gamma_hi, int n_points,
                    Precision precision);

struct MinGapPoint {
    double gamma_min;
    double delta_min;
};

// Locates the minimum gap: coarse 33-point scan of the window gamma_c +-
// max(0.2, 8/N), then golden section on the dip. In extended mode the field
// itself is refined in double-double, since the dip becomes narrower than
// one ulp of gamma for large N. p = kPInfinity delegates to grover_min_gap.
MinGapPoint min_gap(int p, int n, Precision precision);

struct ScalingFit {
    std::vector<std::pair<double, double>> points;  // (N, delta_min) used
    double alpha;
    double intercept;
    double residual;  // max |deviation| in log2 units
};

// Least squares on log2(delta_min / N) = intercept - alpha N. Setting
// with_prefactor = false fits log2(delta_min) instead (not used for the
// headline exponents).
ScalingFit scaling_fit(const std::vector<std::pair<double, double>>& points,
                       bool with_prefactor = true);

struct Table1Row {
    int p;
    double gamma_c = 0.0, m_c = 0.0, alpha_sharp = 0.0, alpha_tanh = 0.0;
    double alpha_simu = 0.0;
    bool has_critical = false;  // gamma_c, m_c, alpha_sharp valid
    bool has_tanh = false;
    bool has_simu = false;
    std::string error;  // empty when every cell computed
};

struct Table1Options {
    bool with_simu = true;
    std::vector<int> n_values = {40, 50, 60, 70, 80, 90, 100, 110, 120};
    int fit_min_n = 40;  // small sizes excluded from the exponent fit
    Precision precision = Precision::Extended;
};

// Joins the critical point, the two instanton exponents, and the
// diagonalization exponent into one row per p; failures are recorded
// per row without aborting the others.
std::vector<Table1Row> table1_pipeline(const std::vector<int>& p_list,
                                       const Table1Options& options = {});

struct AnnealingTimes {
    double tau_lz;        // Landau-Zener threshold scale, delta^-2
    double tau_adaptive;  // locally adiabatic schedule scale, delta^-1
};

AnnealingTimes annealing_time_estimate(double delta_min);

}  // namespace annealgap
