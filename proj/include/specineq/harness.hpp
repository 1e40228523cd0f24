#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specineq/cases.hpp"
#include "specineq/grid.hpp"

namespace specineq {

enum class VerdictTag { Certified, Violated, Inconclusive };

/// Outcome of one inequality check under interval semantics. The margin is
/// the minimum widened slack across the case's constituent inequalities;
/// positive means satisfied.
struct Verdict {
  VerdictTag tag = VerdictTag::Inconclusive;
  double margin = 0.0;
};

std::string verdict_name(VerdictTag tag);

/// Aggregate of a grid scan.
struct CheckReport {
  CaseId case_id = CaseId::L2_1;
  Direction direction = Direction::AsStated;
  GridSpec grid;
  double tol = 0.0;
  std::int64_t lattice_size = 0;
  std::int64_t certified = 0;
  std::int64_t violated = 0;
  std::int64_t inconclusive = 0;
  std::int64_t skipped_hypothesis_failures = 0;
  double worst_margin = 0.0;
  std::optional<CaseParams> worst_point;
  std::vector<std::pair<CaseParams, double>> witnesses;  // all Violated, capped
  std::int64_t witness_cap = 0;

  std::int64_t evaluated() const {
    return certified + violated + inconclusive;
  }
};

/// Witness cap recorded in every report.
inline constexpr std::int64_t default_witness_cap = 100;

/// Classifies a single point. Returns nullopt on hypothesis-skip.
std::optional<Verdict> check_point(CaseId id, const CaseParams& params,
                                   double tol,
                                   Direction direction = Direction::AsStated);

/// Optional per-point capture for CSV dumps.
struct PointRecord {
  std::int64_t lattice_index = 0;
  CaseParams params;
  Verdict verdict;
};

/// Applies check_point at every lattice point, in row-major order with the
/// last axis fastest. Deterministic for a given grid. Throws BudgetError if
/// the lattice exceeds `budget`.
CheckReport scan_grid(CaseId id, const GridSpec& grid, double tol,
                      Direction direction = Direction::AsStated,
                      std::int64_t budget = default_lattice_budget,
                      std::vector<PointRecord>* capture = nullptr);

/// First lattice point whose verdict is Violated for the chosen direction.
std::optional<std::pair<CaseParams, double>> search_counterexample(
    CaseId id, Direction direction, const GridSpec& grid, double tol,
    std::int64_t budget = default_lattice_budget);

/// Pairwise monotonicity scan for the theorem cases: for every setting of
/// the non-t axes and every ordered pair t_i < t_j on the t axis, checks the
/// ordering of the case's monotone functional. The report's lattice size is
/// (non-t lattice) x (number of ordered pairs).
CheckReport scan_monotone_pairs(CaseId id, const GridSpec& grid, double tol,
                                std::int64_t budget = default_lattice_budget);

}  // namespace specineq
