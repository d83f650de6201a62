#pragma once

#include <stdexcept>
#include <string>

namespace leibcoh {

// Malformed numeric or structured input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes or fields of operands do not fit together.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An algebraic identity or precondition does not hold on the given data.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A differential would exceed the structural nonzero budget.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace leibcoh
