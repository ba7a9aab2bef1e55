#pragma once

#include <stdexcept>
#include <string>

namespace bomol {

// Invalid input or a request outside the model's range. Maps to exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoOddBoundState : public DomainError {
public:
    using DomainError::DomainError;
};

class CouplingOutOfRange : public DomainError {
public:
    using DomainError::DomainError;
};

class DegenerateDenominator : public DomainError {
public:
    using DomainError::DomainError;
};

// Grid does not put a contact interaction on a node.
class GridAlignmentError : public DomainError {
public:
    using DomainError::DomainError;
};

// Requested grid is larger than the node budget.
class GridBudgetExceeded : public DomainError {
public:
    using DomainError::DomainError;
};

// Iterative method failed. Maps to exit code 2.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what, double best_estimate = 0.0)
        : std::runtime_error(what), best_(best_estimate) {}
    double best_estimate() const noexcept { return best_; }

private:
    double best_;
};

} // namespace bomol
