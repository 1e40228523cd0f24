#include "specineq/grid.hpp"

#include <cmath>

namespace specineq {

Axis Axis::uniform(std::string name, double lo, double hi,
                   std::int64_t count) {
  if (!(lo <= hi)) {
    throw DomainError("Axis " + name + ": lo must be <= hi");
  }
  if (count < 1) {
    throw DomainError("Axis " + name + ": count must be >= 1");
  }
  Axis a;
  a.name = std::move(name);
  a.lo = lo;
  a.hi = hi;
  a.count = count;
  return a;
}

Axis Axis::explicit_values(std::string name, std::vector<double> values) {
  if (values.empty()) {
    throw DomainError("Axis " + name + ": explicit value list is empty");
  }
  Axis a;
  a.name = std::move(name);
  a.values = std::move(values);
  a.lo = a.values.front();
  a.hi = a.values.back();
  a.count = static_cast<std::int64_t>(a.values.size());
  return a;
}

double Axis::sample(std::int64_t i) const {
  if (is_explicit()) return values[static_cast<std::size_t>(i)];
  if (count == 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) /
                  static_cast<double>(count - 1);
}

std::int64_t GridSpec::lattice_size() const {
  std::int64_t total = 1;
  for (const Axis& a : axes) total *= a.size();
  return total;
}

const Axis* GridSpec::find(const std::string& name) const {
  for (const Axis& a : axes) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

void GridSpec::override_axis(const Axis& axis) {
  for (Axis& a : axes) {
    if (a.name == axis.name) {
      a = axis;
      return;
    }
  }
  throw DomainError("grid override: no axis named '" + axis.name + "'");
}

LatticeIterator::LatticeIterator(const GridSpec& grid)
    : grid_(grid),
      pos_(grid.axes.size(), 0),
      point_(grid.axes.size(), 0.0) {
  if (grid_.axes.empty()) {
    done_ = true;
    return;
  }
  for (std::size_t d = 0; d < grid_.axes.size(); ++d) {
    point_[d] = grid_.axes[d].sample(0);
  }
}

void LatticeIterator::next() {
  ++index_;
  // Last axis fastest.
  for (std::size_t d = grid_.axes.size(); d-- > 0;) {
    if (++pos_[d] < grid_.axes[d].size()) {
      point_[d] = grid_.axes[d].sample(pos_[d]);
      return;
    }
    pos_[d] = 0;
    point_[d] = grid_.axes[d].sample(0);
  }
  done_ = true;
}

}  // namespace specineq
