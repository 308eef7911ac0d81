#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace raagsplit {

// Bad caller input: unknown vertices, malformed data, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed its configured size cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

// A point lies too close to the ball boundary for the requested check.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A constructed object failed one of its own postconditions. Seeing this
// means a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace raagsplit
