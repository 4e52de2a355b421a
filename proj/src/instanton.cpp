#include "annealgap/instanton.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "annealgap/errors.hpp"
#include "annealgap/model.hpp"

namespace annealgap {

InstantonPath two_kink_path(int p, double beta, double width, double slices_per_unit) {
    if (!(beta > 0.0) || !(width > 0.0))
        throw SpecError(SpecError::Kind::InvalidTemperature, "need beta > 0 and width > 0");
    CriticalPoint cp = zero_T_critical_point(p);
    double hmax = p * std::pow(cp.m_c, p - 1);
    int n_slices = int(std::ceil(slices_per_unit * beta * std::max(cp.gamma_c, hmax)));
    double dt = beta / n_slices;
    double tau1 = beta / 4.0, tau2 = 3.0 * beta / 4.0;

    Eigen::VectorXd prof(n_slices);
    for (int i = 0; i < n_slices; ++i) {
        double t = (i + 0.5) * dt;
        prof[i] = 0.5 * (std::tanh((t - tau1) / width) - std::tanh((t - tau2) / width));
    }
    prof *= cp.m_c / prof.maxCoeff();  // plateau exactly at m_c
    return {beta, n_slices, width, {tau1, tau2}, prof};
}

double path_free_energy(int p, double gamma, const InstantonPath& path) {
    validate_spec({p, 1, gamma, path.beta});
    double m_max = std::max(0.0, path.values.size() ? path.values.maxCoeff() : 0.0);
    double rate = std::max(gamma, p * std::pow(m_max, p - 1));
    if (path.n_slices + 1 < 200.0 * path.beta * rate)
        throw DomainError("Trotter grid too coarse: need n_slices >= 200 beta max(gamma, p m^(p-1))");

    const double dt = path.beta / path.n_slices;
    Eigen::Matrix2d T = Eigen::Matrix2d::Identity();
    double log_norm = 0.0;
    double mp_sum = 0.0;
    for (int i = 0; i < path.n_slices; ++i) {
        double m = path.values[i];
        double h = m > 0.0 ? p * std::pow(m, p - 1) : 0.0;
        double r = std::hypot(gamma, h);
        double ch = std::cosh(dt * r);
        double s = r > 0.0 ? std::sinh(dt * r) / r : dt;  // exact slice exponential
        Eigen::Matrix2d M;
        M << ch + s * h, s * gamma, s * gamma, ch - s * h;
        T = (M * T).eval();
        double norm = T.cwiseAbs().maxCoeff();
        T /= norm;
        log_norm += std::log(norm);
        mp_sum += m > 0.0 ? std::pow(m, p) : 0.0;
    }
    double log_tr = log_norm + std::log(T.trace());
    return (p - 1) * mp_sum / path.n_slices - log_tr / path.beta;
}

InstantonResult instanton_cost(int p, double gamma, double beta, double width,
                               double slices_per_unit) {
    CriticalPoint cp = zero_T_critical_point(p);
    if (std::fabs(gamma - cp.gamma_c) > 1e-6)
        throw DomainError("instanton cost requires the degenerate field gamma = gamma_c(p)");

    InstantonPath path = two_kink_path(p, beta, width, slices_per_unit);
    double f_path = path_free_energy(p, gamma, path);

    // Equilibrium reference through the same discretized evaluator, so the
    // Trotter bias cancels in the difference.
    InstantonPath flat = path;
    flat.values.setConstant(cp.m_c);
    double f_ferro = path_free_energy(p, gamma, flat);
    flat.values.setZero();
    double f_para = path_free_energy(p, gamma, flat);
    if (std::fabs(f_ferro - f_para) > 1e-6)
        throw DomainError("free-energy minima not degenerate at this field");
    double f_eq = 0.5 * (f_ferro + f_para);

    double cost = beta * (f_path - f_eq) / 2.0;
    return {cost, cost / std::log(2.0), f_eq, width};
}

InstantonResult tanh_instanton_alpha(int p, double slices_per_unit) {
    CriticalPoint cp = zero_T_critical_point(p);
    auto cost_at = [&](double log_w) {
        double w = std::exp(log_w);
        double beta = std::max(50.0, 100.0 * w);
        return instanton_cost(p, cp.gamma_c, beta, w, slices_per_unit).cost;
    };

    const double a0 = std::log(1e-2), b0 = std::log(1e2);
    double a = a0, b = b0;
    const double gr = 0.6180339887498949;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = cost_at(c), fd = cost_at(d);
    while (b - a > 1e-4) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = cost_at(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = cost_at(d);
        }
    }
    double log_w = 0.5 * (a + b);
    if (log_w < a0 + 0.01 * (b0 - a0) || log_w > b0 - 0.01 * (b0 - a0))
        throw ConvergenceError("width minimizer hit the search boundary; widen the bracket",
                               std::exp(a0), std::exp(b0));
    double w = std::exp(log_w);
    return instanton_cost(p, cp.gamma_c, std::max(50.0, 100.0 * w), w, slices_per_unit);
}

double sharp_wall_alpha(int p) {
    if (p == kPInfinity) return 0.5;
    CriticalPoint cp = zero_T_critical_point(p);
    double theta = std::atan2(cp.gamma_c, p * std::pow(cp.m_c, p - 1));
    double overlap = std::cos(0.5 * theta - 0.25 * M_PI);
    return -std::log2(overlap);
}

}  // namespace annealgap
