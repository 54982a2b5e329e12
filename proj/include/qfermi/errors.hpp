#pragma once

#include <stdexcept>
#include <string>

namespace qfermi {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Laurent polynomial with negative exponents evaluated at q = 0.
class ZeroBaseError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A series requested in a regime of q where it is not defined numerically.
class RegimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An exact division left a remainder. Always an internal bug.
class InexactDivisionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands whose kinds or shapes do not fit together.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qfermi
