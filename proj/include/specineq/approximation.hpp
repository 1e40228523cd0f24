#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace specineq {

/// A computed value together with a rigorous absolute error bound.
/// Whenever the producing operation's preconditions hold, the true
/// mathematical quantity lies in [value - error_bound, value + error_bound].
struct Approximation {
  double value = 0.0;
  double error_bound = 0.0;

  bool converged_to(double tol) const { return error_bound <= tol; }
};

namespace constants {
/// Euler-Mascheroni constant, rounded to nearest double.
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double ln_two_pi = 1.83787706640934548356065947281123527;
}  // namespace constants

/// Argument outside the mathematical domain of the requested function.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Result not representable in double precision (overflow); the message
/// names the threshold.
class RangeError : public std::range_error {
 public:
  explicit RangeError(const std::string& what) : std::range_error(what) {}
};

/// A numeric evaluation failed (non-finite term, failed convergence...).
/// Carries the offending series index when one exists.
class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(const std::string& what, std::int64_t index = -1)
      : std::runtime_error(what), index_(index) {}
  std::int64_t index() const { return index_; }

 private:
  std::int64_t index_;
};

}  // namespace specineq
