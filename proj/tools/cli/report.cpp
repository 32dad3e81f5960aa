#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cli.hpp"
#include "qaskey/version.hpp"

namespace qaskey::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string_view format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Human: break;
  }
  return "human";
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

double parse_real(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("not a number: " + s);
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

cplx parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_real(text), 0.0};
  return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

std::vector<cplx> parse_params(std::string_view text) {
  std::vector<cplx> out;
  if (trim(text).empty()) return out;
  if (text.find(';') == std::string_view::npos) {
    std::size_t start = 0;
    for (;;) {
      const auto comma = text.find(',', start);
      out.emplace_back(parse_real(text.substr(start, comma - start)), 0.0);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  }
  std::size_t start = 0;
  for (;;) {
    const auto semi = text.find(';', start);
    const auto item = text.substr(start, semi == std::string_view::npos ? semi : semi - start);
    if (!trim(item).empty()) out.push_back(parse_complex(item));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_number(cplx v) {
  if (v.imag() == 0.0) return format_number(v.real());
  return format_number(v.real()) + "," + format_number(v.imag());
}

void add_check(Report& report, std::string name,
               std::vector<std::pair<std::string, std::string>> inputs, std::string computed,
               std::string reference, double defect, double tol) {
  CheckRecord r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.computed = std::move(computed);
  r.reference = std::move(reference);
  r.defect = defect;
  r.tol = tol;
  r.pass = defect <= tol;
  report.checks.push_back(std::move(r));
}

void write_report(const Report& report, const RunConfig& cfg, OutputFormat format,
                  std::ostream& out) {
  std::size_t passed = 0;
  double worst = 0.0;
  for (const auto& c : report.checks) {
    if (c.pass) ++passed;
    if (std::isnan(c.defect) || c.defect > worst) worst = std::isnan(c.defect) ? INFINITY : c.defect;
  }

  if (format == OutputFormat::Json) {
    ojson config;
    config["command"] = cfg.command;
    config["family"] = cfg.family;
    config["q"] = format_number(cfg.q);
    config["alpha"] = format_number(cfg.alpha);
    ojson params = ojson::array();
    for (const cplx& p : cfg.params) params.push_back(format_number(p));
    config["params"] = params;
    config["n"] = cfg.n;
    config["m"] = cfg.m;
    config["max_degree"] = cfg.max_degree;
    config["tol"] = format_number(cfg.tol);
    config["output"] = std::string(format_name(format));
    if (!cfg.only.empty()) config["only"] = cfg.only;

    ojson doc;
    doc["meta"] = {{"version", QASKEY_VERSION_STRING}, {"seed", cfg.seed}, {"config", config}};
    ojson checks = ojson::array();
    for (const auto& c : report.checks) {
      ojson inputs = ojson::object();
      for (const auto& [k, v] : c.inputs) inputs[k] = v;
      checks.push_back({{"name", c.name},
                        {"inputs", inputs},
                        {"computed", c.computed},
                        {"reference", c.reference},
                        {"defect", format_number(c.defect)},
                        {"tol", format_number(c.tol)},
                        {"pass", c.pass}});
    }
    doc["checks"] = checks;
    doc["summary"] = {{"total", report.checks.size()},
                      {"passed", passed},
                      {"failed", report.checks.size() - passed},
                      {"worst_defect", format_number(worst)}};
    out << doc.dump(2) << '\n';
    return;
  }

  if (format == OutputFormat::Csv) {
    out << "name,defect,tol,pass\n";
    for (const auto& c : report.checks) {
      out << csv_field(c.name) << ',' << format_number(c.defect) << ',' << format_number(c.tol)
          << ',' << (c.pass ? "true" : "false") << '\n';
    }
    return;
  }

  for (const auto& c : report.checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.inputs.empty()) {
      out << " (";
      for (std::size_t i = 0; i < c.inputs.size(); ++i) {
        out << (i ? " " : "") << c.inputs[i].first << '=' << c.inputs[i].second;
      }
      out << ')';
    }
    out << "\n       computed  " << c.computed;
    if (!c.reference.empty()) out << "\n       reference " << c.reference;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e (tol %.1e)", c.defect, c.tol);
    out << "\n       defect    " << buf << '\n';
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu/%zu checks passed, worst defect %.3e, %.2f s\n", passed,
                report.checks.size(), worst, report.wall_time);
  out << buf;
}

}  // namespace qaskey::cli
