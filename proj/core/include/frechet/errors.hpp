#pragma once

#include <stdexcept>
#include <string>

namespace frechet {

// Operands of different dimension were combined.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A parameter lies outside the domain an operation is defined on.
class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A documented precondition of an algorithm does not hold for the inputs
// (for example a query curve longer than the oracle's budget).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed file or payload.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace frechet
