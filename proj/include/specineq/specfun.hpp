#pragma once

#include <cstdint>
#include <string>

#include "specineq/approximation.hpp"
#include "specineq/series.hpp"

namespace specineq {

/// Default absolute tolerance requested from the evaluators.
inline constexpr double default_eval_tol = 1e-12;

/// Gamma overflows in double precision for t above this threshold.
inline constexpr double gamma_overflow_threshold = 171.624;

enum class FunctionTag {
  Gamma,
  LogGamma,
  Digamma,
  Polygamma,  // order m >= 1
  KGamma,     // deformation parameter k > 0
  KDigamma,
  PGamma,  // p >= 1 integer
  PDigamma,
  QGamma,  // 0 < q < 1
  QDigamma,
};

/// Names an evaluable function together with its family parameter.
struct FunctionId {
  FunctionTag tag = FunctionTag::Digamma;
  int m = 1;        // Polygamma
  double k = 1.0;   // KGamma / KDigamma
  long p = 1;       // PGamma / PDigamma
  double q = 0.5;   // QGamma / QDigamma

  /// Throws DomainError if the family parameter is out of range.
  void validate() const;
  std::string name() const;
  static FunctionId parse(const std::string& name);
};

struct EvalPoint {
  double t = 1.0;
  double tol = default_eval_tol;
};

// Classical family. All results carry certified absolute error bounds.
Approximation log_gamma(double t, double tol = default_eval_tol);
Approximation gamma(double t, double tol = default_eval_tol);
Approximation digamma(double t, double tol = default_eval_tol);
Approximation polygamma(int m, double t, double tol = default_eval_tol);

// k-analogues.
Approximation log_k_gamma(double k, double t, double tol = default_eval_tol);
Approximation k_gamma(double k, double t, double tol = default_eval_tol);
Approximation k_digamma(double k, double t, double tol = default_eval_tol);

// p-analogues (finite Gauss product).
Approximation log_p_gamma(long p, double t, double tol = default_eval_tol);
Approximation p_gamma(long p, double t, double tol = default_eval_tol);
Approximation p_digamma(long p, double t, double tol = default_eval_tol);

// q-analogues.
Approximation log_q_gamma(double q, double t, double tol = default_eval_tol);
Approximation q_gamma(double q, double t, double tol = default_eval_tol);
Approximation q_digamma(double q, double t, double tol = default_eval_tol);

// Reference paths: direct summation of the defining partial-fraction series
// through the adaptive series engine. Convergence is O(t/N) for the digamma
// forms, so desk-scale tolerances are limited; production callers use the
// asymptotic paths above, tests compare the two.
Approximation digamma_series(double t, double tol,
                             std::int64_t n_max = default_series_n_max,
                             SeriesStats* stats = nullptr);
Approximation k_digamma_series(double k, double t, double tol,
                               std::int64_t n_max = default_series_n_max,
                               SeriesStats* stats = nullptr);
Approximation polygamma_series(int m, double t, double tol,
                               std::int64_t n_max = default_series_n_max,
                               SeriesStats* stats = nullptr);

/// Dispatch by FunctionId (CLI surface).
Approximation evaluate(const FunctionId& fn, double t,
                       double tol = default_eval_tol);

}  // namespace specineq
