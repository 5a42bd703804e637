#pragma once

#include <stdexcept>
#include <string>

namespace luinv {

/// Thrown when a brute-force enumeration would exceed its configured size limit.
class EnumerationBoundError : public std::runtime_error {
 public:
  EnumerationBoundError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}

  /// Number of objects the refused enumeration would have visited.
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// An identity that must hold mathematically failed at runtime, e.g. a
/// non-integral generator count. These are findings, never rounded away.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace luinv
