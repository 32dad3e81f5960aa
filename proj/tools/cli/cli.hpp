#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qaskey/log_complex.hpp"

namespace qaskey::cli {

enum class OutputFormat { Human, Json, Csv };

struct RunConfig {
  std::string command;
  std::string family = "hermite";
  double q = 0.5;
  double alpha = 1.0;
  std::vector<cplx> params;
  std::string params_text;
  int n = 0;
  int m = 0;
  int max_degree = 4;
  double tol = 1e-8;
  bool tol_given = false;
  OutputFormat output = OutputFormat::Human;
  std::uint64_t seed = 42;
  std::vector<std::string> only;
  std::string rep = "all";
  cplx z{1.0, 0.0};
  bool z_given = false;
  cplx x{0.0, 0.0};
  bool x_given = false;
};

struct CheckRecord {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string computed;
  std::string reference;
  double defect = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct Report {
  std::vector<CheckRecord> checks;
  double wall_time = 0.0;
};

/// Parses "re" or "re,im".
cplx parse_complex(std::string_view text);
/// ';'-separated list of "re" or "re,im"; without ';' a comma-separated list of reals.
std::vector<cplx> parse_params(std::string_view text);

/// 17 significant digits; complex values as "re,im".
std::string format_number(double v);
std::string format_number(cplx v);

/// Appends a record with pass = defect <= tol (a NaN defect fails).
void add_check(Report& report, std::string name,
               std::vector<std::pair<std::string, std::string>> inputs, std::string computed,
               std::string reference, double defect, double tol);

void write_report(const Report& report, const RunConfig& cfg, OutputFormat format,
                  std::ostream& out);

/// Names accepted by `suite --only`, in registry order.
const std::vector<std::string>& suite_groups();
/// Runs the seeded battery (optionally filtered by cfg.only) into report.
void run_suite(const RunConfig& cfg, Report& report);

/// Entry point: 0 when every check passes, 1 when a check fails, 2 on an
/// invalid configuration.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qaskey::cli
