#pragma once

#include <stdexcept>
#include <string>

namespace braidberry {

/// Operand shapes do not fit the operation.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input lies outside the region where an operation is defined
/// (non-Hermitian input, sin(theta) = 0, singular Baxterization denominator).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A structural property the construction guarantees was violated
/// (block leakage, failed expansion reconstruction).
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerically verified claim did not hold (e.g. period check).
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Discretization too coarse for band tracking.
class StepCountError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace braidberry
