#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "specineq/approximation.hpp"

namespace specineq {

namespace detail {
// Outward nudge by two ulps; covers the rounding of one or two double
// operations on the endpoint.
inline double down2(double x) {
  const double inf = std::numeric_limits<double>::infinity();
  return std::nextafter(std::nextafter(x, -inf), -inf);
}
inline double up2(double x) {
  const double inf = std::numeric_limits<double>::infinity();
  return std::nextafter(std::nextafter(x, inf), inf);
}
}  // namespace detail

/// Minimal closed-interval arithmetic over doubles. Endpoints are nudged
/// outward after every operation so the enclosure survives endpoint
/// rounding.
struct Ival {
  double lo = 0.0;
  double hi = 0.0;

  static Ival exact(double v) { return {v, v}; }
  static Ival widened(double v) { return {detail::down2(v), detail::up2(v)}; }
  static Ival from(const Approximation& a) {
    return {a.value - a.error_bound, a.value + a.error_bound};
  }

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool certainly_positive() const { return lo > 0.0; }
};

inline Ival operator+(Ival a, Ival b) {
  return {detail::down2(a.lo + b.lo), detail::up2(a.hi + b.hi)};
}

inline Ival operator-(Ival a, Ival b) {
  return {detail::down2(a.lo - b.hi), detail::up2(a.hi - b.lo)};
}

inline Ival operator-(Ival a) { return {-a.hi, -a.lo}; }

inline Ival operator*(Ival a, Ival b) {
  const double p1 = a.lo * b.lo;
  const double p2 = a.lo * b.hi;
  const double p3 = a.hi * b.lo;
  const double p4 = a.hi * b.hi;
  return {detail::down2(std::min({p1, p2, p3, p4})),
          detail::up2(std::max({p1, p2, p3, p4}))};
}

/// Scale by an exact scalar.
inline Ival scale(Ival a, double c) {
  if (c >= 0.0) return {detail::down2(c * a.lo), detail::up2(c * a.hi)};
  return {detail::down2(c * a.hi), detail::up2(c * a.lo)};
}

/// Natural log of a certainly-positive interval.
inline Ival ival_log(Ival a) {
  if (!(a.lo > 0.0)) {
    throw EvaluationError("ival_log: interval not certainly positive");
  }
  return {detail::down2(std::log(a.lo)), detail::up2(std::log(a.hi))};
}

inline Ival ival_exp(Ival a) {
  return {detail::down2(std::exp(a.lo)), detail::up2(std::exp(a.hi))};
}

}  // namespace specineq
