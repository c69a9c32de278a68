#pragma once

#include <stdexcept>
#include <string>

namespace grassqh {

// Bad caller input: malformed values, out-of-range parameters.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input that is well-formed but outside an operation's precondition
// (e.g. core_search with k < 3).
class PreconditionViolation : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// An internal identity failed. Always a bug, never a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Requested data that the underlying mathematics leaves undetermined
// (the square of the primitive class on the Gr(3,8) section).
class UndeterminedBySource : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace grassqh
