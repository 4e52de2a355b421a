#pragma once

#include <utility>

namespace annealgap {

struct LevelPair {
    double lambda0;
    double lambda1;
    double eta;  // lambda0 + gamma N, depth of the split-off level
    double gap() const { return lambda1 - lambda0; }
};

// log C(n, k) via lgamma.
double log_binomial(int n, int k);

// Left-hand side of the secular equation (N/2^N) sum_k C(N,k) /
// (gamma (N-2k) - lambda); eigenvalues solve lhs = 1. Log-space binomials
// plus compensated summation keep it stable to N ~ 10^4.
double dispersion_lhs(int n, double gamma, double lambda);

// Two lowest levels of the p = infinity model: lambda0 below the pole comb,
// lambda1 in the first inter-pole interval. Root finding runs in the offset
// eta = lambda + gamma N, so exponentially small splittings keep full
// relative accuracy.
LevelPair lowest_two_levels(int n, double gamma);

// Asymptotic minimum gap 2 N 2^(-N/2).
double min_gap_asymptotic(int n);

// Perturbative ground energy -N - gamma^2 (gamma < 1) or -gamma N
// (gamma > 1); throws DomainError at gamma = 1.
double perturbative_gs_energy(int n, double gamma);

// Minimum of the gap over gamma near the finite-size transition point;
// returns (gamma_min, delta_min).
std::pair<double, double> grover_min_gap(int n);

}  // namespace annealgap
