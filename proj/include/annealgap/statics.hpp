#pragma once

#include <vector>

namespace annealgap {

enum class Branch { Ferro, QuantumPara };

struct FreeEnergyPoint {
    double m;
    double f;
    Branch branch;
};

struct PhasePoint {
    double beta;
    double gamma_star;  // first-order boundary field
    double m_jump;      // magnetization discontinuity across the boundary
};

// log(2 cosh x) without overflow: |x| + log1p(exp(-2|x|)).
double log_2cosh(double x);

// Static-approximation free-energy density
// f(m) = (p-1) m^p - (1/beta) log(2 cosh(beta sqrt(gamma^2 + p^2 m^(2p-2)))).
double free_energy(int p, double beta, double gamma, double m);

// Residual of the self-consistency condition m = (p m^(p-1)/r) tanh(beta r);
// zero at every stationary point of f.
double self_consistency_residual(int p, double beta, double gamma, double m);

// m = 0 plus every positive root of the self-consistency condition, found by
// grid scan and bisection, each labeled with its free energy.
std::vector<FreeEnergyPoint> magnetization_solutions(int p, double beta, double gamma);

// The thermodynamically stable branch (minimal f, ties to Ferro).
FreeEnergyPoint equilibrium(int p, double beta, double gamma);

// First-order boundary at fixed temperature: the field where the
// ferromagnetic and quantum-paramagnetic free energies cross.
// Throws DomainError when no ferromagnetic branch exists at this beta.
PhasePoint phase_boundary(int p, double beta);

// p = infinity boundary gamma(beta) = arccosh(e^beta / 2) / beta.
// Throws DomainError for beta < log 2.
double pinf_transition_line(double beta);

// p = infinity classical free energy min(-1, -log2/beta).
double classical_pinf_free_energy(double beta);

// Low-temperature expansion e_GS + 2 r exp(-2 beta r), r = sqrt(gamma^2 +
// p^2 m^(2p-2)); requires beta r >= 5 (throws DomainError outside the regime).
double low_T_energy(int p, double beta, double gamma, double m);

}  // namespace annealgap
