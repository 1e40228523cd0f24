#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>

#include "specineq/approximation.hpp"

namespace specineq {

/// Upper bound on the magnitude of the series tail: tail(N) must dominate
/// |sum of term(n) for n >= N| and be non-increasing in N.
using TailBound = std::function<double(std::int64_t)>;

/// Default absolute tolerance for adaptive truncation.
inline constexpr double default_series_tol = 1e-12;
/// Default term budget; hitting it yields an honest over-tolerance bound.
inline constexpr std::int64_t default_series_n_max = 100'000'000;

struct SeriesStats {
  std::int64_t terms_used = 0;
  bool converged = false;  // tail bound reached tol within the budget
};

/// Neumaier-compensated accumulator. Error after n additions is bounded by
/// 2*eps*sum(|x_i|) to first order; exact for the empty sum.
class CompensatedAccumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double result() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Compensated sum of a finite sequence. Throws EvaluationError on a
/// non-finite input.
inline double compensated_sum(std::span<const double> terms) {
  CompensatedAccumulator acc;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!std::isfinite(terms[i])) {
      throw EvaluationError(
          "compensated_sum: non-finite term at index " + std::to_string(i),
          static_cast<std::int64_t>(i));
    }
    acc.add(terms[i]);
  }
  return acc.result();
}

/// Adaptively truncated summation of term(0) + term(1) + ... with a
/// certified tail bound. Stops after the first N >= 1 terms with
/// tail(N) <= tol, else at n_max; the returned error_bound is
/// tail(N) + accumulated rounding estimate either way.
template <class Term, class Tail>
Approximation sum_tail_bounded(Term&& term, Tail&& tail, double tol,
                               std::int64_t n_max,
                               SeriesStats* stats = nullptr) {
  if (!(tol > 0.0)) throw DomainError("sum_tail_bounded: tol must be > 0");
  if (n_max < 1) throw DomainError("sum_tail_bounded: n_max must be >= 1");

  CompensatedAccumulator acc;
  double abs_sum = 0.0;
  double tail_bound = std::numeric_limits<double>::infinity();
  std::int64_t n = 0;
  bool converged = false;
  while (n < n_max) {
    const double x = term(n);
    if (!std::isfinite(x)) {
      throw EvaluationError(
          "sum_tail_bounded: non-finite term at index " + std::to_string(n),
          n);
    }
    acc.add(x);
    abs_sum += std::abs(x);
    ++n;
    tail_bound = tail(n);
    if (tail_bound <= tol) {
      converged = true;
      break;
    }
  }
  if (stats != nullptr) {
    stats->terms_used = n;
    stats->converged = converged;
  }
  const double rounding =
      2.0 * std::numeric_limits<double>::epsilon() * abs_sum;
  return Approximation{acc.result(), tail_bound + rounding};
}

template <class Term, class Tail>
Approximation sum_tail_bounded(Term&& term, Tail&& tail,
                               double tol = default_series_tol) {
  return sum_tail_bounded(std::forward<Term>(term), std::forward<Tail>(tail),
                          tol, default_series_n_max);
}

}  // namespace specineq
