#include "annealgap/statics.hpp"

#include <cmath>
#include <optional>

#include "annealgap/errors.hpp"
#include "annealgap/model.hpp"

namespace annealgap {

double log_2cosh(double x) {
    double a = std::fabs(x);
    return a + std::log1p(std::exp(-2.0 * a));
}

double free_energy(int p, double beta, double gamma, double m) {
    double r = std::hypot(gamma, p * std::pow(m, p - 1));
    return (p - 1) * std::pow(m, p) - log_2cosh(beta * r) / beta;
}

double self_consistency_residual(int p, double beta, double gamma, double m) {
    double h = p * std::pow(m, p - 1);
    double r = std::hypot(gamma, h);
    if (r == 0.0) return m;
    return m - h * std::tanh(beta * r) / r;
}

namespace {

std::vector<FreeEnergyPoint> positive_roots(int p, double beta, double gamma) {
    std::vector<FreeEnergyPoint> roots;
    const double step = 1e-3;
    double m_prev = step;
    double g_prev = self_consistency_residual(p, beta, gamma, m_prev);
    for (int i = 2; i <= 1000; ++i) {
        double m = i * step;
        double g = self_consistency_residual(p, beta, gamma, m);
        if ((g_prev < 0.0) != (g < 0.0)) {
            double lo = m_prev, hi = m;
            for (int it = 0; it < 60; ++it) {
                double mid = 0.5 * (lo + hi);
                double gm = self_consistency_residual(p, beta, gamma, mid);
                if ((gm < 0.0) == (g_prev < 0.0))
                    lo = mid;
                else
                    hi = mid;
            }
            double root = 0.5 * (lo + hi);
            roots.push_back({root, free_energy(p, beta, gamma, root), Branch::Ferro});
        }
        m_prev = m;
        g_prev = g;
    }
    return roots;
}

void require_finite_beta(double beta) {
    if (!std::isfinite(beta))
        throw SpecError(SpecError::Kind::InvalidTemperature,
                        "statics needs finite beta; zero-temperature queries have closed forms");
}

}  // namespace

std::vector<FreeEnergyPoint> magnetization_solutions(int p, double beta, double gamma) {
    require_finite_beta(beta);
    validate_spec({p, 1, gamma, beta});
    std::vector<FreeEnergyPoint> out;
    out.push_back({0.0, free_energy(p, beta, gamma, 0.0), Branch::QuantumPara});
    for (const auto& r : positive_roots(p, beta, gamma)) out.push_back(r);
    return out;
}

FreeEnergyPoint equilibrium(int p, double beta, double gamma) {
    auto sols = magnetization_solutions(p, beta, gamma);
    FreeEnergyPoint best = sols.front();  // quantum paramagnet
    for (std::size_t i = 1; i < sols.size(); ++i)
        if (sols[i].f <= best.f) best = sols[i];  // ties break toward Ferro
    return best;
}

namespace {

// +1 when the ferromagnetic branch exists and wins, -1 otherwise.
int ferro_wins(int p, double beta, double gamma, double* m_ferro = nullptr) {
    double f_qp = free_energy(p, beta, gamma, 0.0);
    auto roots = positive_roots(p, beta, gamma);
    double best_f = 0.0, best_m = 0.0;
    bool have = false;
    for (const auto& r : roots)
        if (!have || r.f < best_f) {
            best_f = r.f;
            best_m = r.m;
            have = true;
        }
    if (m_ferro) *m_ferro = have ? best_m : 0.0;
    return have && best_f <= f_qp ? 1 : -1;
}

}  // namespace

PhasePoint phase_boundary(int p, double beta) {
    require_finite_beta(beta);
    validate_spec({p, 1, 0.0, beta});
    double glo = 1e-6;
    if (ferro_wins(p, beta, glo) < 0)
        throw DomainError("no transition at this beta: paramagnet already stable at gamma ~ 0");
    double ghi = 1.0;
    while (ferro_wins(p, beta, ghi) > 0) {
        ghi *= 1.5;
        if (ghi > 64.0) throw DomainError("no transition at this beta: ferromagnet never yields");
    }
    for (int it = 0; it < 100 && ghi - glo > 1e-13 * ghi; ++it) {
        double mid = 0.5 * (glo + ghi);
        if (ferro_wins(p, beta, mid) > 0)
            glo = mid;
        else
            ghi = mid;
    }
    double m_jump = 0.0;
    ferro_wins(p, beta, glo, &m_jump);
    return {beta, 0.5 * (glo + ghi), m_jump};
}

double pinf_transition_line(double beta) {
    const double log2 = std::log(2.0);
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    if (beta < log2) throw DomainError("no transition below beta = log 2");
    // arccosh(e^beta/2) = beta - log 2 + log1p(sqrt(1 - 4 e^(-2 beta))),
    // stable for arbitrarily large beta.
    double acosh_val = beta - log2 + std::log1p(std::sqrt(1.0 - 4.0 * std::exp(-2.0 * beta)));
    return acosh_val / beta;
}

double classical_pinf_free_energy(double beta) {
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    return std::min(-1.0, -std::log(2.0) / beta);
}

double low_T_energy(int p, double beta, double gamma, double m) {
    double r = std::hypot(gamma, p * std::pow(m, p - 1));
    if (!(beta * r >= 5.0))
        throw DomainError("low-temperature expansion requires beta * sqrt(gamma^2 + p^2 m^(2p-2)) >= 5");
    return gs_energy_density(p, gamma, m) + 2.0 * r * std::exp(-2.0 * beta * r);
}

}  // namespace annealgap
