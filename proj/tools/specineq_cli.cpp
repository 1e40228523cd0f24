// Command-line front end: error-bounded evaluation, grid scans with interval
// verdicts, counterexample search, and machine-readable reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specineq/harness.hpp"
#include "specineq/report.hpp"
#include "specineq/specfun.hpp"

namespace {

using namespace specineq;

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_violated = 2;
constexpr int exit_inconclusive_only = 3;
constexpr int exit_usage = 64;
constexpr int exit_io = 74;

std::int64_t lattice_budget() {
  const char* env = std::getenv("SPECINEQ_BUDGET");
  if (env == nullptr || *env == '\0') return default_lattice_budget;
  try {
    const long long v = std::stoll(env);
    if (v < 1) throw std::invalid_argument("non-positive");
    return v;
  } catch (const std::exception&) {
    throw DomainError(std::string("SPECINEQ_BUDGET: not a positive integer: ") +
                      env);
  }
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw DomainError(what + ": cannot parse number '" + text + "'");
  }
}

// "name=lo:hi:count" (uniform) or "name=v1,v2,..." (explicit values).
Axis parse_grid_override(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw DomainError("grid override must look like name=lo:hi:count or "
                      "name=v1,v2,...: '" + text + "'");
  }
  const std::string name = text.substr(0, eq);
  const std::string body = text.substr(eq + 1);
  if (body.find(',') != std::string::npos || body.find(':') == std::string::npos) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= body.size()) {
      const auto comma = body.find(',', start);
      const std::string item = body.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      values.push_back(parse_number(item, "grid override " + name));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return Axis::explicit_values(name, std::move(values));
  }
  const auto c1 = body.find(':');
  const auto c2 = body.find(':', c1 + 1);
  if (c2 == std::string::npos) {
    throw DomainError("grid override must look like name=lo:hi:count: '" +
                      text + "'");
  }
  const double lo = parse_number(body.substr(0, c1), "grid override " + name);
  const double hi =
      parse_number(body.substr(c1 + 1, c2 - c1 - 1), "grid override " + name);
  const std::string count_text = body.substr(c2 + 1);
  long long count = 0;
  try {
    std::size_t pos = 0;
    count = std::stoll(count_text, &pos);
    if (pos != count_text.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw DomainError("grid override " + name + ": bad count '" + count_text +
                      "'");
  }
  return Axis::uniform(name, lo, hi, count);
}

GridSpec grid_for(const CaseInfo& info,
                  const std::vector<std::string>& overrides) {
  GridSpec grid = info.default_grid;
  for (const std::string& o : overrides) {
    grid.override_axis(parse_grid_override(o));
  }
  return grid;
}

Direction parse_direction(const std::string& text) {
  if (text == "as-stated") return Direction::AsStated;
  if (text == "negated") return Direction::Negated;
  throw DomainError("--direction must be as-stated or negated, got '" + text +
                    "'");
}

int scan_exit_status(const CheckReport& report) {
  if (report.violated > 0) return exit_violated;
  if (report.certified == 0 && report.inconclusive > 0) {
    return exit_inconclusive_only;
  }
  return exit_ok;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::ios_base::failure("cannot open output file: " + path);
  }
  out << content;
  out.flush();
  if (!out) {
    throw std::ios_base::failure("failed writing output file: " + path);
  }
}

void print_scan_summary(const CheckReport& report) {
  const CaseInfo& info = case_info(report.case_id);
  std::cout << "case " << info.name << " (" << info.citation
            << "): certified " << report.certified << ", violated "
            << report.violated << ", inconclusive " << report.inconclusive
            << ", skipped " << report.skipped_hypothesis_failures
            << ", worst margin " << format_full(report.worst_margin) << "\n";
}

struct CliOptions {
  std::string fn_name;
  double t = 1.0;
  bool has_t = false;
  int m = 1;
  double k = 1.0;
  long p = 1;
  double q = 0.5;
  double tol = 1e-10;  // CLI default, looser than the library default
  std::string out_path;
  std::string direction = "as-stated";
  std::vector<std::string> grid_overrides;
  std::string case_name;
};

int run_eval(const CliOptions& opt, const std::vector<std::string>& argv) {
  FunctionId fn = FunctionId::parse(opt.fn_name);
  fn.m = opt.m;
  fn.k = opt.k;
  fn.p = opt.p;
  fn.q = opt.q;
  fn.validate();
  if (!opt.has_t) throw DomainError("eval requires --t");
  const Approximation result = evaluate(fn, opt.t, opt.tol);
  std::cout << "value " << format_full(result.value) << "\n"
            << "error_bound " << format_full(result.error_bound) << "\n";
  if (!opt.out_path.empty()) {
    ReportDocument doc(argv);
    doc.add_eval(fn, opt.t, opt.tol, result);
    write_output(opt.out_path, doc.serialize());
  }
  return exit_ok;
}

int run_scan(const CliOptions& opt, const std::vector<std::string>& argv) {
  const CaseId id = parse_case(opt.case_name);
  const CaseInfo& info = case_info(id);
  const GridSpec grid = grid_for(info, opt.grid_overrides);
  const Direction direction = parse_direction(opt.direction);
  const CheckReport report =
      scan_grid(id, grid, opt.tol, direction, lattice_budget());
  print_scan_summary(report);
  if (!opt.out_path.empty()) {
    ReportDocument doc(argv);
    doc.add_report(report);
    write_output(opt.out_path, doc.serialize());
  }
  return scan_exit_status(report);
}

int run_scan_all(const CliOptions& opt, const std::vector<std::string>& argv) {
  ReportDocument doc(argv);
  int worst = exit_ok;
  for (const CaseInfo& info : list_cases()) {
    const CheckReport report = scan_grid(info.id, info.default_grid, opt.tol,
                                         Direction::AsStated,
                                         lattice_budget());
    print_scan_summary(report);
    doc.add_report(report);
    const int status = scan_exit_status(report);
    // 2 dominates 3 dominates 0.
    if (status == exit_violated ||
        (status == exit_inconclusive_only && worst == exit_ok)) {
      worst = status == exit_violated ? exit_violated
                                      : std::max(worst, status);
    }
  }
  if (!opt.out_path.empty()) write_output(opt.out_path, doc.serialize());
  return worst;
}

int run_csv(const CliOptions& opt) {
  const CaseId id = parse_case(opt.case_name);
  const CaseInfo& info = case_info(id);
  const GridSpec grid = grid_for(info, opt.grid_overrides);
  const Direction direction = parse_direction(opt.direction);
  std::vector<PointRecord> rows;
  scan_grid(id, grid, opt.tol, direction, lattice_budget(), &rows);
  const std::string csv = to_csv(info, rows);
  if (opt.out_path.empty()) {
    std::cout << csv;
  } else {
    write_output(opt.out_path, csv);
  }
  return exit_ok;
}

int run_cases() {
  for (const CaseInfo& info : list_cases()) {
    std::cout << info.name << "\t" << info.citation << "\n  " << info.statement
              << "\n  parameters:";
    for (const std::string& p : info.param_names) std::cout << " " << p;
    std::cout << "\n";
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"error-bounded special functions and a grid-certified "
               "inequality harness"};
  app.require_subcommand(1);

  CliOptions opt;
  std::vector<std::string> invocation(argv, argv + argc);

  CLI::App* eval = app.add_subcommand("eval", "evaluate one function");
  eval->add_option("--fn", opt.fn_name, "function name")->required();
  eval->add_option("--t", opt.t, "argument t")->required();
  eval->add_option("--m", opt.m, "polygamma order");
  eval->add_option("--k", opt.k, "k-deformation parameter");
  eval->add_option("--p", opt.p, "p parameter");
  eval->add_option("--q", opt.q, "q parameter");

  CLI::App* scan = app.add_subcommand("scan", "scan one case over a grid");
  scan->add_option("case", opt.case_name, "case name")->required();

  CLI::App* scan_all =
      app.add_subcommand("scan-all", "scan every case on default grids");

  CLI::App* csv = app.add_subcommand("csv", "per-point CSV dump of a scan");
  csv->add_option("case", opt.case_name, "case name")->required();

  CLI::App* cases = app.add_subcommand("cases", "list the case catalog");

  for (CLI::App* sub : {eval, scan, scan_all, csv}) {
    sub->add_option("--tol", opt.tol, "absolute tolerance");
    sub->add_option("--out", opt.out_path, "output file path");
  }
  for (CLI::App* sub : {scan, csv}) {
    sub->add_option("--grid", opt.grid_overrides,
                    "axis override name=lo:hi:count or name=v1,v2,...");
    sub->add_option("--direction", opt.direction, "as-stated | negated");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }
  opt.has_t = eval->count("--t") > 0;

  try {
    if (eval->parsed()) return run_eval(opt, invocation);
    if (scan->parsed()) return run_scan(opt, invocation);
    if (scan_all->parsed()) return run_scan_all(opt, invocation);
    if (csv->parsed()) return run_csv(opt);
    if (cases->parsed()) return run_cases();
    std::cerr << "no subcommand given\n";
    return exit_usage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return exit_io;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}
