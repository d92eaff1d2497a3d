#pragma once

#include <stdexcept>
#include <string>

namespace abprop {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation at a singular point (e.g. Y_nu at x = 0).
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A truncation or quadrature budget was exhausted before reaching tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inputs are valid in principle but outside the region a method supports.
class ValidityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace abprop
