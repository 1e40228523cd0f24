#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specineq/approximation.hpp"

namespace specineq {

/// Default cap on the total lattice size of a scan.
inline constexpr std::int64_t default_lattice_budget = 1'000'000;

/// One scan axis: either `count` uniform samples over the closed interval
/// [lo, hi], or an explicit list of sample values.
struct Axis {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  std::int64_t count = 1;
  std::vector<double> values;  // non-empty => explicit axis

  static Axis uniform(std::string name, double lo, double hi,
                      std::int64_t count);
  static Axis explicit_values(std::string name, std::vector<double> values);

  bool is_explicit() const { return !values.empty(); }
  std::int64_t size() const {
    return is_explicit() ? static_cast<std::int64_t>(values.size()) : count;
  }
  double sample(std::int64_t i) const;
};

/// A scan lattice: the cartesian product of its axes, iterated in row-major
/// order with the last axis fastest.
struct GridSpec {
  std::vector<Axis> axes;

  std::int64_t lattice_size() const;
  const Axis* find(const std::string& name) const;
  /// Replaces the axis with the same name; throws DomainError if absent.
  void override_axis(const Axis& axis);
};

/// Lattice budget exceeded; the message states the required budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Row-major odometer over a grid. Visits points in a deterministic order
/// independent of any evaluation schedule.
class LatticeIterator {
 public:
  explicit LatticeIterator(const GridSpec& grid);
  bool done() const { return done_; }
  std::int64_t index() const { return index_; }
  const std::vector<double>& point() const { return point_; }
  void next();

 private:
  const GridSpec& grid_;
  std::vector<std::int64_t> pos_;
  std::vector<double> point_;
  std::int64_t index_ = 0;
  bool done_ = false;
};

}  // namespace specineq
