#pragma once
// Exception types shared across the library.  Everything user-facing throws
// InvalidInput (or the more specific ConstraintError); InternalError means a
// broken invariant and maps to a distinct process exit code in the CLI.

#include <stdexcept>
#include <string>
#include <utility>

namespace gsc {

// Bad user-supplied data: malformed files, out-of-domain arguments, requests
// for unsupported combinations.
class InvalidInput : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An arithmetic constraint (congruence, gcd condition, range) failed while
// assembling a family.  Carries a stable identifier for the constraint so
// callers can report which condition was violated without string matching.
class ConstraintError : public InvalidInput {
public:
  ConstraintError(std::string constraint, const std::string& detail)
      : InvalidInput("constraint '" + constraint + "' violated: " + detail),
        constraint_(std::move(constraint)) {}

  const std::string& constraint() const noexcept { return constraint_; }

private:
  std::string constraint_;
};

// A violated internal invariant: indicates a bug in this library, not a
// usage error.  The CLI converts this to exit code 2.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace gsc
