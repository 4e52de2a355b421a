#pragma once

#include <limits>

#include "annealgap/errors.hpp"

namespace annealgap {

// Symbolic interaction order p = infinity (the unstructured-search limit).
inline constexpr int kPInfinity = -1;

// Symbolic inverse temperature for exact zero-temperature formulas.
inline constexpr double kZeroT = std::numeric_limits<double>::infinity();

struct ModelSpec {
    int p = 3;           // interaction order, odd >= 3, or kPInfinity
    int n_sites = 10;    // number of spins N
    double gamma = 1.0;  // transverse field
    double beta = kZeroT;
};

// Throws SpecError on invalid parameters, returns the spec unchanged otherwise.
ModelSpec validate_spec(const ModelSpec& spec);

struct CriticalPoint {
    double gamma_c;
    double m_c;
};

// Ground-state energy density e(m) = (p-1) m^p - sqrt(gamma^2 + p^2 m^(2p-2)).
double gs_energy_density(int p, double gamma, double m);

// d/dm of gs_energy_density.
double gs_energy_density_dm(int p, double gamma, double m);

// Zero-temperature first-order transition: the field where the ferromagnetic
// minimum of e(m) becomes degenerate with the paramagnetic value -gamma.
CriticalPoint zero_T_critical_point(int p);

// Large-p expansion (1 + 1/(2p), 1 - 1/(2p^2)); exact (1, 1) at p = infinity.
CriticalPoint asymptotic_critical_point(int p);

}  // namespace annealgap
