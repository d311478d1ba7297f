#pragma once

#include <stdexcept>
#include <string>

namespace vantage {

/// Malformed textual input: configuration files, scalars, witness records.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rejection-sampled generator ran out of attempts before hitting its target.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mixed radicands, dimension mismatch, or otherwise incompatible operands.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace vantage
