#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace bessel_series {

namespace detail {

// %g formatting for diagnostics; std::to_string prints 1e-10 as 0.000000.
inline std::string format_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace detail

/// Argument outside the documented domain of a primitive (negative z, b > 1, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A series request that is structurally invalid, e.g. the divergent A-case at n = 0, b = 1.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative evaluation ran out of its term budget before meeting its stop rule.
class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The alternating-series truncation bound does not hold for the requested series and K.
class BoundNotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Panel refinement hit its cap without the doubling test passing.
class QuadratureNotConverged : public std::runtime_error {
 public:
  QuadratureNotConverged(const std::string& what, double estimate, double change)
      : std::runtime_error(what), estimate_(estimate), change_(change) {}

  double estimate() const noexcept { return estimate_; }
  double last_change() const noexcept { return change_; }

 private:
  double estimate_;
  double change_;
};

}  // namespace bessel_series
