#pragma once

#include <utility>

#include <Eigen/Core>

namespace annealgap {

struct InstantonPath {
    double beta;
    int n_slices;
    double width;                          // tanh kink width
    std::pair<double, double> kink_times;  // (tau1, tau2), periodic two-kink placement
    Eigen::VectorXd values;                // m at slice midpoints
};

struct InstantonResult {
    double cost;           // per-kink action G, natural log units
    double alpha;          // G / ln 2, exponent in the 2^(-alpha N) gap law
    double equilibrium_f;  // degenerate free energy entering the two-level operator
    double width;          // kink width used (the minimizer for the variational result)
};

// Periodic two-kink trajectory 0 -> m_c(p) -> 0 with kinks at beta/4 and
// 3 beta/4, plateau normalized to m_c.
InstantonPath two_kink_path(int p, double beta, double width, double slices_per_unit = 200.0);

// Free energy of an arbitrary discretized trajectory: (1/beta)[(p-1) int m^p
// - log Tr of the time-ordered 2x2 product], slices multiplied with running
// norm accumulation. Requires n_slices >= 200 beta max(gamma, p max(m)^(p-1)).
double path_free_energy(int p, double gamma, const InstantonPath& path);

// Action cost of one kink at the transition field: G = beta (f[path] -
// f_eq)/2 with f_eq the mean of the two degenerate constant-path values.
// gamma must sit on the transition (within 1e-6 of gamma_c(p)).
InstantonResult instanton_cost(int p, double gamma, double beta, double width,
                               double slices_per_unit = 200.0);

// Variational kink width: golden-section minimization of instanton_cost over
// log-width in [1e-2, 1e2]; beta defaults to max(50, 100 width) per probe.
InstantonResult tanh_instanton_alpha(int p, double slices_per_unit = 200.0);

// Sharp-wall (zero-width) overlap exponent: alpha = -log2 cos(theta/2 - pi/4)
// with theta = atan(gamma_c / (p m_c^(p-1))); exactly 1/2 at p = infinity.
double sharp_wall_alpha(int p);

}  // namespace annealgap
