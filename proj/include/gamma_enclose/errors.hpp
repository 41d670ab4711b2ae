#pragma once

#include <stdexcept>

namespace gamma_enclose {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

// Result not representable (overflow, or underflow into the subnormal range).
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Malformed command-line or configuration input (CLI exit code 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gamma_enclose
