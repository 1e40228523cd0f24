#include "specineq/harness.hpp"

#include <cmath>
#include <limits>

namespace specineq {

namespace {

// Slack of one constituent lhs <= rhs after interval widening. `pess`
// widens against the inequality (certification), `opt` widens in its favor
// (violation).
struct Slack {
  double pess;
  double opt;
};

Slack slack_of(const Ival& lhs, const Ival& rhs) {
  return Slack{rhs.lo - lhs.hi, rhs.hi - lhs.lo};
}

Verdict classify(const std::vector<Constituent>& constituents,
                 Direction direction) {
  bool any_violated = false;
  bool any_inconclusive = false;
  double margin = std::numeric_limits<double>::infinity();
  for (const Constituent& c : constituents) {
    double m = 0.0;
    if (c.identical) {
      m = 0.0;  // both sides denote the same quantity: equality, certified
    } else {
      const Ival& lhs = (direction == Direction::AsStated) ? c.lhs : c.rhs;
      const Ival& rhs = (direction == Direction::AsStated) ? c.rhs : c.lhs;
      const Slack s = slack_of(lhs, rhs);
      if (s.pess >= 0.0) {
        m = s.pess;
      } else if (s.opt < 0.0) {
        any_violated = true;
        m = s.opt;
      } else {
        any_inconclusive = true;
        m = s.pess;
      }
    }
    margin = std::min(margin, m);
  }
  Verdict v;
  v.margin = margin;
  v.tag = any_violated
              ? VerdictTag::Violated
              : (any_inconclusive ? VerdictTag::Inconclusive
                                  : VerdictTag::Certified);
  return v;
}

CaseParams params_at(const GridSpec& grid, const std::vector<double>& point) {
  CaseParams params;
  for (std::size_t d = 0; d < grid.axes.size(); ++d) {
    params[grid.axes[d].name] = point[d];
  }
  return params;
}

void require_budget(std::int64_t lattice, std::int64_t budget,
                    const char* what) {
  if (lattice > budget) {
    throw BudgetError(std::string(what) + ": lattice has " +
                      std::to_string(lattice) +
                      " points, exceeding the budget of " +
                      std::to_string(budget) +
                      "; a budget of at least " + std::to_string(lattice) +
                      " is required");
  }
}

}  // namespace

std::string verdict_name(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::Certified: return "certified";
    case VerdictTag::Violated: return "violated";
    case VerdictTag::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::optional<Verdict> check_point(CaseId id, const CaseParams& params,
                                   double tol, Direction direction) {
  const auto constituents = case_constituents(id, params, tol);
  if (!constituents) return std::nullopt;
  return classify(*constituents, direction);
}

CheckReport scan_grid(CaseId id, const GridSpec& grid, double tol,
                      Direction direction, std::int64_t budget,
                      std::vector<PointRecord>* capture) {
  require_budget(grid.lattice_size(), budget, "scan_grid");
  CheckReport report;
  report.case_id = id;
  report.direction = direction;
  report.grid = grid;
  report.tol = tol;
  report.lattice_size = grid.lattice_size();
  report.witness_cap = default_witness_cap;
  report.worst_margin = std::numeric_limits<double>::infinity();

  for (LatticeIterator it(grid); !it.done(); it.next()) {
    const CaseParams params = params_at(grid, it.point());
    const auto verdict = check_point(id, params, tol, direction);
    if (!verdict) {
      ++report.skipped_hypothesis_failures;
      continue;
    }
    switch (verdict->tag) {
      case VerdictTag::Certified: ++report.certified; break;
      case VerdictTag::Violated: ++report.violated; break;
      case VerdictTag::Inconclusive: ++report.inconclusive; break;
    }
    if (verdict->margin < report.worst_margin) {
      report.worst_margin = verdict->margin;
      report.worst_point = params;
    }
    if (verdict->tag == VerdictTag::Violated &&
        static_cast<std::int64_t>(report.witnesses.size()) <
            report.witness_cap) {
      report.witnesses.emplace_back(params, verdict->margin);
    }
    if (capture != nullptr) {
      capture->push_back(PointRecord{it.index(), params, *verdict});
    }
  }
  if (report.evaluated() == 0) report.worst_margin = 0.0;
  return report;
}

std::optional<std::pair<CaseParams, double>> search_counterexample(
    CaseId id, Direction direction, const GridSpec& grid, double tol,
    std::int64_t budget) {
  require_budget(grid.lattice_size(), budget, "search_counterexample");
  for (LatticeIterator it(grid); !it.done(); it.next()) {
    const CaseParams params = params_at(grid, it.point());
    const auto verdict = check_point(id, params, tol, direction);
    if (verdict && verdict->tag == VerdictTag::Violated) {
      return std::make_pair(params, verdict->margin);
    }
  }
  return std::nullopt;
}

CheckReport scan_monotone_pairs(CaseId id, const GridSpec& grid, double tol,
                                std::int64_t budget) {
  const bool increasing = monotone_increasing(id);

  GridSpec outer;
  const Axis* t_axis = nullptr;
  for (const Axis& a : grid.axes) {
    if (a.name == "t") {
      t_axis = &a;
    } else {
      outer.axes.push_back(a);
    }
  }
  if (t_axis == nullptr) {
    throw DomainError("scan_monotone_pairs: grid has no 't' axis");
  }
  const std::int64_t t_count = t_axis->size();
  const std::int64_t pairs = t_count * (t_count - 1) / 2;
  const std::int64_t outer_size = outer.axes.empty() ? 1 : outer.lattice_size();
  require_budget(outer_size * pairs, budget, "scan_monotone_pairs");

  CheckReport report;
  report.case_id = id;
  report.grid = grid;
  report.tol = tol;
  report.lattice_size = outer_size * pairs;
  report.witness_cap = default_witness_cap;
  report.worst_margin = std::numeric_limits<double>::infinity();

  std::vector<std::optional<Ival>> values(
      static_cast<std::size_t>(t_count));
  std::vector<double> t_samples(static_cast<std::size_t>(t_count));
  for (std::int64_t i = 0; i < t_count; ++i) {
    t_samples[static_cast<std::size_t>(i)] = t_axis->sample(i);
  }

  LatticeIterator it(outer);
  do {
    CaseParams params = outer.axes.empty()
                            ? CaseParams{}
                            : params_at(outer, it.point());
    for (std::int64_t i = 0; i < t_count; ++i) {
      values[static_cast<std::size_t>(i)] = monotone_functional(
          id, params, t_samples[static_cast<std::size_t>(i)], tol);
    }
    for (std::int64_t i = 0; i < t_count; ++i) {
      for (std::int64_t j = i + 1; j < t_count; ++j) {
        const auto& fi = values[static_cast<std::size_t>(i)];
        const auto& fj = values[static_cast<std::size_t>(j)];
        if (!fi || !fj) {
          ++report.skipped_hypothesis_failures;
          continue;
        }
        Constituent c;
        c.lhs = increasing ? *fi : *fj;
        c.rhs = increasing ? *fj : *fi;
        c.identical =
            t_samples[static_cast<std::size_t>(i)] ==
                t_samples[static_cast<std::size_t>(j)] ||
            (fi->lo == fi->hi && fj->lo == fj->hi && fi->lo == fj->lo);
        c.label = "monotone pair";
        const Verdict v = classify({c}, Direction::AsStated);
        switch (v.tag) {
          case VerdictTag::Certified: ++report.certified; break;
          case VerdictTag::Violated: ++report.violated; break;
          case VerdictTag::Inconclusive: ++report.inconclusive; break;
        }
        if (v.margin < report.worst_margin) {
          report.worst_margin = v.margin;
          CaseParams pair_params = params;
          pair_params["t1"] = t_samples[static_cast<std::size_t>(i)];
          pair_params["t2"] = t_samples[static_cast<std::size_t>(j)];
          report.worst_point = pair_params;
        }
        if (v.tag == VerdictTag::Violated &&
            static_cast<std::int64_t>(report.witnesses.size()) <
                report.witness_cap) {
          CaseParams pair_params = params;
          pair_params["t1"] = t_samples[static_cast<std::size_t>(i)];
          pair_params["t2"] = t_samples[static_cast<std::size_t>(j)];
          report.witnesses.emplace_back(pair_params, v.margin);
        }
      }
    }
    if (outer.axes.empty()) break;
    it.next();
  } while (!it.done());

  if (report.evaluated() == 0) report.worst_margin = 0.0;
  return report;
}

}  // namespace specineq
