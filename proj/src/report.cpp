#include "specineq/report.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <ctime>
#include <sstream>

namespace specineq {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec);
  return buf;
}

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

nlohmann::json to_json(const GridSpec& grid) {
  nlohmann::json axes = nlohmann::json::array();
  for (const Axis& a : grid.axes) {
    nlohmann::json ja;
    ja["name"] = a.name;
    if (a.is_explicit()) {
      ja["values"] = a.values;
    } else {
      ja["lo"] = a.lo;
      ja["hi"] = a.hi;
      ja["count"] = a.count;
    }
    axes.push_back(ja);
  }
  return nlohmann::json{{"axes", axes}};
}

namespace {

nlohmann::json params_json(const CaseParams& params) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, value] : params) j[name] = value;
  return j;
}

}  // namespace

nlohmann::json to_json(const CheckReport& report) {
  const CaseInfo& info = case_info(report.case_id);
  nlohmann::json j;
  j["type"] = "scan";
  j["case"] = info.name;
  j["citation"] = info.citation;
  j["direction"] =
      report.direction == Direction::AsStated ? "as-stated" : "negated";
  j["tol"] = report.tol;
  j["grid"] = to_json(report.grid);
  j["lattice_size"] = report.lattice_size;
  j["counts"] = {{"certified", report.certified},
                 {"violated", report.violated},
                 {"inconclusive", report.inconclusive},
                 {"skipped_hypothesis_failures",
                  report.skipped_hypothesis_failures}};
  j["worst_margin"] = report.worst_margin;
  if (report.worst_point) {
    j["worst_point"] = params_json(*report.worst_point);
  } else {
    j["worst_point"] = nullptr;
  }
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& [params, margin] : report.witnesses) {
    witnesses.push_back(
        {{"params", params_json(params)}, {"margin", margin}});
  }
  j["witnesses"] = witnesses;
  j["witness_cap"] = report.witness_cap;
  return j;
}

ReportDocument::ReportDocument(std::vector<std::string> invocation) {
  doc_["schema_version"] = report_schema_version;
  doc_["timestamp"] = utc_timestamp();
  doc_["invocation"] = invocation;
  doc_["results"] = nlohmann::json::array();
}

void ReportDocument::add_eval(const FunctionId& fn, double t, double tol,
                              const Approximation& result) {
  nlohmann::json j;
  j["type"] = "eval";
  j["function"] = fn.name();
  switch (fn.tag) {
    case FunctionTag::Polygamma: j["m"] = fn.m; break;
    case FunctionTag::KGamma:
    case FunctionTag::KDigamma: j["k"] = fn.k; break;
    case FunctionTag::PGamma:
    case FunctionTag::PDigamma: j["p"] = fn.p; break;
    case FunctionTag::QGamma:
    case FunctionTag::QDigamma: j["q"] = fn.q; break;
    default: break;
  }
  j["t"] = t;
  j["tol"] = tol;
  j["value"] = result.value;
  j["error_bound"] = result.error_bound;
  doc_["results"].push_back(j);
}

void ReportDocument::add_report(const CheckReport& report) {
  doc_["results"].push_back(to_json(report));
}

std::string ReportDocument::serialize() const { return doc_.dump(2) + "\n"; }

std::string to_csv(const CaseInfo& info,
                   const std::vector<PointRecord>& rows) {
  std::ostringstream out;
  for (const std::string& name : info.param_names) out << name << ",";
  out << "margin,verdict\n";
  for (const PointRecord& row : rows) {
    for (const std::string& name : info.param_names) {
      const auto it = row.params.find(name);
      out << (it != row.params.end() ? format_full(it->second) : "") << ",";
    }
    out << format_full(row.verdict.margin) << ","
        << verdict_name(row.verdict.tag) << "\n";
  }
  return out.str();
}

}  // namespace specineq
