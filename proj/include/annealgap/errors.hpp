#pragma once

#include <stdexcept>
#include <string>

namespace annealgap {

// Invalid model parameters, with a machine-checkable kind.
class SpecError : public std::invalid_argument {
public:
    enum class Kind {
        UnsupportedInteractionOrder,
        InvalidSize,
        InvalidField,
        InvalidTemperature,
    };

    SpecError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// An iterative solver failed to converge; carries the last bracket for diagnosis.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double bracket_lo, double bracket_hi)
        : std::runtime_error(what), bracket_lo_(bracket_lo), bracket_hi_(bracket_hi) {}
    double bracket_lo() const { return bracket_lo_; }
    double bracket_hi() const { return bracket_hi_; }

private:
    double bracket_lo_, bracket_hi_;
};

// Requested quantity does not exist in the given regime (e.g. no phase
// transition at this temperature, or perturbative energy at the transition).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace annealgap
