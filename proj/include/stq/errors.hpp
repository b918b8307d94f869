#pragma once

#include <stdexcept>
#include <string>

namespace stq {

/// An input violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact division in Z[X] left a nonzero remainder.
class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stq
