#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "specineq/harness.hpp"
#include "specineq/specfun.hpp"

namespace specineq {

inline constexpr const char* report_schema_version = "1.0.0";

/// Machine-readable document for one CLI invocation: a key/value tree with
/// all numbers rendered at full (round-trip) precision. Two runs with the
/// same arguments differ only in the timestamp field.
class ReportDocument {
 public:
  explicit ReportDocument(std::vector<std::string> invocation);

  void add_eval(const FunctionId& fn, double t, double tol,
                const Approximation& result);
  void add_report(const CheckReport& report);

  const nlohmann::json& json() const { return doc_; }
  std::string serialize() const;

 private:
  nlohmann::json doc_;
};

nlohmann::json to_json(const GridSpec& grid);
nlohmann::json to_json(const CheckReport& report);

/// UTC instant in ISO-8601 form.
std::string utc_timestamp();

/// Fixed-format rendering with 17 significant digits (CSV cells).
std::string format_full(double v);

/// One row per evaluated lattice point: parameters in schema order, margin,
/// verdict. Skipped points are filtered out.
std::string to_csv(const CaseInfo& info, const std::vector<PointRecord>& rows);

}  // namespace specineq
