#pragma once

#include <stdexcept>
#include <string>

namespace zg {

/// Two ring elements (or an element and a group) live over different groups.
class GroupMismatch : public std::invalid_argument {
 public:
  GroupMismatch() : std::invalid_argument("ring elements belong to different groups") {}
};

/// An enumeration or construction would exceed a desk-scale budget.
class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A caller broke a documented precondition (bad parameters, wrong group shape).
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A property that the construction guarantees did not hold when checked.
/// Always a bug in the library, never a user error.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zg
