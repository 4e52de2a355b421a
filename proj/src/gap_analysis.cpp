#include "annealgap/gap_analysis.hpp"

#include <algorithm>
#include <cmath>

#include "annealgap/errors.hpp"
#include "annealgap/grover.hpp"
#include "annealgap/instanton.hpp"
#include "annealgap/model.hpp"
#include "annealgap/parallel.hpp"

namespace annealgap {

GapCurve gamma_scan(int p, int n, double gamma_lo, double gamma_hi, int n_points,
                    Precision precision) {
    if (!(gamma_lo < gamma_hi) || n_points < 3)
        throw SpecError(SpecError::Kind::InvalidField, "need gamma_lo < gamma_hi and >= 3 points");
    GapCurve curve{p, n, std::vector<GapPoint>(n_points)};
    parallel_for(n_points, [&](int i) {
        double g = gamma_lo + (gamma_hi - gamma_lo) * i / (n_points - 1);
        GapValue v = sector_gap(p, n, g, precision);
        curve.points[i] = {g, v.delta, v.resolved};
    });
    return curve;
}

namespace {

struct GapEval {
    double delta;
    bool resolved;
};

MinGapPoint refine_standard(int p, int n, double a, double b) {
    auto gap_at = [&](double g) { return sector_gap(p, n, g, Precision::Standard); };
    const double gr = 0.6180339887498949;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    GapValue fc = gap_at(c), fd = gap_at(d);
    while (b - a > 1e-10 * std::max(1.0, std::fabs(b))) {
        if (fc.delta < fd.delta) {
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
    GapValue best = gap_at(g);
    if (!best.resolved)
        throw DomainError("minimum gap below standard resolution; enable extended precision");
    return {g, best.delta};
}

MinGapPoint refine_extended(int p, int n, double a0, double b0) {
    auto gap_at = [&](const DoubleDouble& g) { return sector_gap_dd(p, n, g); };
    DoubleDouble a(a0), b(b0);
    const DoubleDouble gr(0.6180339887498949);
    DoubleDouble c = b - gr * (b - a), d = a + gr * (b - a);
    GapValueDD fc = gap_at(c), fd = gap_at(d);
    const DoubleDouble tol(1e-25);
    while ((b - a) > tol) {
        if (fc.delta < fd.delta) {
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
    DoubleDouble g = (a + b) * DoubleDouble(0.5);
    GapValueDD best = gap_at(g);
    if (!best.resolved)
        throw DomainError("minimum gap below extended resolution");
    return {g.to_double(), best.delta.to_double()};
}

}  // namespace

MinGapPoint min_gap(int p, int n, Precision precision) {
    if (p == kPInfinity) {
        auto [g, delta] = grover_min_gap(n);
        return {g, delta};
    }
    CriticalPoint cp = zero_T_critical_point(p);
    double half = std::max(0.2, 8.0 / n);
    double lo = std::max(1e-6, cp.gamma_c - half), hi = cp.gamma_c + half;

    // Coarse localization so the exponentially narrow dip is not missed.
    const int n_coarse = 33;
    std::vector<GapEval> coarse(n_coarse);
    parallel_for(n_coarse, [&](int i) {
        double g = lo + (hi - lo) * i / (n_coarse - 1);
        GapValue v = sector_gap(p, n, g, precision);
        coarse[i] = {v.delta, v.resolved};
    });
    int best = -1;
    for (int i = 0; i < n_coarse; ++i)
        if (coarse[i].resolved && (best < 0 || coarse[i].delta < coarse[best].delta)) best = i;
    if (best < 0)
        throw DomainError(precision == Precision::Standard
                              ? "all scan points unresolved; enable extended precision"
                              : "all scan points unresolved at extended precision");
    double step = (hi - lo) / (n_coarse - 1);
    double a = std::max(lo, lo + (best - 1) * step);
    double b = std::min(hi, lo + (best + 1) * step);
    return precision == Precision::Standard ? refine_standard(p, n, a, b)
                                            : refine_extended(p, n, a, b);
}

ScalingFit scaling_fit(const std::vector<std::pair<double, double>>& points, bool with_prefactor) {
    if (points.size() < 4)
        throw DomainError("scaling fit needs at least 4 resolved points");
    double n_min = points[0].first, n_max = points[0].first;
    for (const auto& [n, d] : points) {
        n_min = std::min(n_min, n);
        n_max = std::max(n_max, n);
    }
    if (n_max < 2.0 * n_min)
        throw DomainError("scaling fit needs sizes spanning a factor of 2");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = points.size();
    for (const auto& [n, d] : points) {
        double y = std::log2(with_prefactor ? d / n : d);
        sx += n;
        sy += y;
        sxx += n * n;
        sxy += n * y;
    }
    double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    double intercept = (sy - slope * sx) / k;
    double residual = 0.0;
    for (const auto& [n, d] : points) {
        double y = std::log2(with_prefactor ? d / n : d);
        residual = std::max(residual, std::fabs(y - (intercept + slope * n)));
    }
    return {points, -slope, intercept, residual};
}

std::vector<Table1Row> table1_pipeline(const std::vector<int>& p_list,
                                       const Table1Options& options) {
    std::vector<Table1Row> rows;
    rows.reserve(p_list.size());
    for (int p : p_list) {
        Table1Row row;
        row.p = p;
        try {
            if (p < 3 || p > 31 || p % 2 == 0)
                throw SpecError(SpecError::Kind::UnsupportedInteractionOrder,
                                "unsupported interaction order (need odd p in [3, 31])");
            CriticalPoint cp = zero_T_critical_point(p);
            row.gamma_c = cp.gamma_c;
            row.m_c = cp.m_c;
            row.alpha_sharp = sharp_wall_alpha(p);
            row.has_critical = true;
            row.alpha_tanh = tanh_instanton_alpha(p).alpha;
            row.has_tanh = true;
            if (options.with_simu) {
                std::vector<std::pair<double, double>> pts;
                for (int n : options.n_values) {
                    if (n < options.fit_min_n) continue;
                    MinGapPoint mg = min_gap(p, n, options.precision);
                    pts.push_back({double(n), mg.delta_min});
                }
                row.alpha_simu = scaling_fit(pts).alpha;
                row.has_simu = true;
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(row);
    }
    return rows;
}

AnnealingTimes annealing_time_estimate(double delta_min) {
    if (!(delta_min > 0.0)) throw DomainError("annealing time estimate needs delta_min > 0");
    return {1.0 / (delta_min * delta_min), 1.0 / delta_min};
}

}  // namespace annealgap
