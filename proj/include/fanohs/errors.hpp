#pragma once

#include <stdexcept>
#include <string>

namespace fanohs {

// Bad input: infeasible points, malformed polytopes, unknown names.
// The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A denominator factor vanished at an evaluation point.  Callers doing
// randomized sampling treat this as a resample signal.
class PoleError : public DomainError {
public:
  explicit PoleError(const std::string& what) : DomainError(what) {}
};

// An identity that must hold by construction failed (pole non-cancellation,
// direction-dependent coefficients).  Signals corrupt input data or a bug,
// never a user mistake.  The CLI maps this to exit code 2.
class InternalConsistencyError : public std::runtime_error {
public:
  explicit InternalConsistencyError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace fanohs
