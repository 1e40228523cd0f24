#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specineq/grid.hpp"
#include "specineq/interval.hpp"

namespace specineq {

/// One tag per numbered statement in the verified catalog.
enum class CaseId {
  L2_1,
  L2_2,
  T2_3,
  R2_4,
  R2_5,
  L2_7,
  L2_8,
  T2_9,
  R2_10,
  KrasniqiP,
  KrasniqiQ,
  L3_1,
  T3_2,
  R3_3,
  L3_4,
  L3_6,
  T3_7,
  R3_8,
  R3_9,
  GJMA_Erratum,
};

inline constexpr int case_count = 20;

/// Named parameter values of one lattice point.
using CaseParams = std::map<std::string, double>;

enum class Direction { AsStated, Negated };

/// One pairwise inequality lhs <= rhs under interval semantics. `identical`
/// marks constituents whose two sides denote the same real quantity by
/// construction (diagonal points, chain endpoints, k = 1 reductions); those
/// certify with margin 0 regardless of direction.
struct Constituent {
  Ival lhs;
  Ival rhs;
  bool identical = false;
  std::string label;
};

struct CaseInfo {
  CaseId id;
  std::string name;       // stable token, also the CLI spelling
  std::string citation;   // statement label in the verified catalog
  std::string statement;  // short human-readable form of the predicate
  std::vector<std::string> param_names;  // schema order
  GridSpec default_grid;
};

/// Complete, stable-ordered catalog (20 entries, first L2_1).
const std::vector<CaseInfo>& list_cases();

const CaseInfo& case_info(CaseId id);
CaseId parse_case(const std::string& name);
std::string case_name(CaseId id);

/// Evaluates the case's constituent inequalities at one point. Returns
/// nullopt when the statement's hypotheses fail there (hypothesis-skip).
/// Throws EvaluationError (naming the sub-expression) on evaluation failure.
std::optional<std::vector<Constituent>> case_constituents(
    CaseId id, const CaseParams& params, double tol);

/// The log of the case's monotone functional (U, V, W or X) at parameter
/// point `params` with the scan variable replaced by `t`. Only defined for
/// the four theorem cases; nullopt when hypotheses fail.
std::optional<Ival> monotone_functional(CaseId id, const CaseParams& params,
                                        double t, double tol);

/// Whether the case's monotone functional is non-decreasing (true) or
/// non-increasing (false). Throws for non-theorem cases.
bool monotone_increasing(CaseId id);

}  // namespace specineq
