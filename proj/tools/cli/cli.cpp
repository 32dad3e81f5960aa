#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qaskey/context.hpp"
#include "qaskey/error.hpp"
#include "qaskey/ortho_continuous.hpp"
#include "qaskey/ortho_discrete.hpp"
#include "qaskey/qpolys.hpp"

namespace qaskey::cli {

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

double rel_diff(cplx a, cplx b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

Family make_family(const RunConfig& cfg) {
  return Family(parse_family(cfg.family), ParamMultiset(cfg.params));
}

QContext make_context(const RunConfig& cfg) {
  if (!(cfg.q > 0.0 && cfg.q < 1.0)) throw DomainError("--q must lie in (0, 1)");
  return QContext::from_env(cfg.q);
}

Inputs base_inputs(const RunConfig& cfg) {
  Inputs in{{"family", cfg.family}, {"q", format_number(cfg.q)}};
  if (!cfg.params.empty()) {
    std::string p;
    for (std::size_t i = 0; i < cfg.params.size(); ++i) {
      p += (i ? ";" : "") + format_number(cfg.params[i]);
    }
    in.emplace_back("params", p);
  }
  return in;
}

void cmd_eval(const RunConfig& cfg, Report& report) {
  const Family fam = make_family(cfg);
  const QContext ctx = make_context(cfg);
  if (cfg.z_given == cfg.x_given) throw DomainError("eval needs exactly one of --z and --x");
  const ZPoint pt = cfg.z_given ? ZPoint(cfg.z) : ZPoint::from_x(cfg.x);
  if (cfg.n < 0 || cfg.n > ctx.degree_cap()) {
    throw DomainError("--n must lie in 0.." + std::to_string(ctx.degree_cap()));
  }
  Rep rep = Rep::Canonical;
  if (cfg.rep == "first") rep = Rep::First;
  if (cfg.rep == "second") rep = Rep::Second;
  if (rep == Rep::Second && representation_count(fam.tag()) < 2) {
    throw DomainError("family " + cfg.family + " has a single representation");
  }

  Inputs in = base_inputs(cfg);
  in.emplace_back("n", std::to_string(cfg.n));
  in.emplace_back("z", format_number(pt.z()));
  in.emplace_back("x", format_number(pt.x()));

  const cplx v = eval_poly(fam, cfg.n, pt, ctx, rep);
  const cplx w = eval_poly(fam, cfg.n, pt.involution(), ctx, rep);
  add_check(report, "eval." + cfg.family + ".involution", in, format_number(v), format_number(w),
            rel_diff(v, w), cfg.tol);
  if (cfg.rep == "all" && representation_count(fam.tag()) == 2) {
    const cplx a = eval_poly(fam, cfg.n, pt, ctx, Rep::First);
    const cplx b = eval_poly(fam, cfg.n, pt, ctx, Rep::Second);
    add_check(report, "eval." + cfg.family + ".representations", in, format_number(a),
              format_number(b), rel_diff(a, b), cfg.tol);
  }
}

void add_gram_records(const std::string& prefix, const GramReport& g, const Inputs& in,
                      double tol, Report& report) {
  const std::size_t size = g.closed_form_diag.size();
  for (std::size_t m = 0; m < size; ++m) {
    for (std::size_t n = 0; n < size; ++n) {
      Inputs e = in;
      e.emplace_back("m", std::to_string(m));
      e.emplace_back("n", std::to_string(n));
      add_check(report, prefix + "[" + std::to_string(m) + "," + std::to_string(n) + "]", e,
                format_number(g.computed[m][n]),
                m == n ? format_number(g.closed_form_diag[n]) : "0", g.defect[m][n], tol);
    }
  }
  for (const auto& f : g.failures) {
    add_check(report, prefix + ".failure", in, f, "", INFINITY, tol);
  }
}

void cmd_gram(const RunConfig& cfg, Report& report) {
  const DiscreteOrthoSpec spec(make_family(cfg), cplx{cfg.alpha, 0.0}, cfg.max_degree,
                               make_context(cfg));
  Inputs in = base_inputs(cfg);
  in.emplace_back("alpha", format_number(cfg.alpha));
  add_gram_records("gram", gram(spec), in, cfg.tol, report);
}

void cmd_cont_gram(const RunConfig& cfg, Report& report) {
  const Family fam = make_family(cfg);
  const QContext ctx = make_context(cfg);
  if (!(cfg.alpha > 0.0)) throw DomainError("--alpha must be positive");
  if (cfg.max_degree < 0 || cfg.max_degree > ctx.degree_cap()) {
    throw DomainError("--max-degree must lie in 0.." + std::to_string(ctx.degree_cap()));
  }
  Inputs in = base_inputs(cfg);
  in.emplace_back("alpha", format_number(cfg.alpha));
  add_gram_records("cont-gram", continuous_gram(fam, cfg.alpha, cfg.max_degree, ctx), in,
                   cfg.tol, report);
}

ParamMultiset four_params(const RunConfig& cfg) {
  if (cfg.params.size() != 4) throw DomainError("--params needs four entries");
  return ParamMultiset(cfg.params);
}

void cmd_qbeta(const RunConfig& cfg, Report& report) {
  const ParamMultiset p = four_params(cfg);
  const QContext ctx = make_context(cfg);
  if (!(cfg.alpha > 0.0)) throw DomainError("--alpha must be positive");
  if (!(std::abs(p.product()) < 1.0 / cfg.q)) throw DomainError("q-beta needs |abcd| < |q|^{-1}");
  Inputs in = base_inputs(cfg);
  in.emplace_back("alpha", format_number(cfg.alpha));
  const auto [quad, closed] = qbeta_integral(cfg.alpha, p, ctx);
  add_check(report, "qbeta", in, format_number(quad), format_number(closed),
            rel_diff(quad, closed), cfg.tol);
}

void cmd_beta(const RunConfig& cfg, Report& report) {
  std::array<double, 4> a{};
  if (!cfg.params.empty()) {
    if (cfg.params.size() != 4) throw DomainError("--params needs four entries");
    for (std::size_t i = 0; i < 4; ++i) {
      if (cfg.params[i].imag() != 0.0) throw DomainError("beta parameters must be real");
      a[i] = cfg.params[i].real();
    }
  }
  if (!(a[0] + a[1] + a[2] + a[3] > -1.0)) throw DomainError("beta needs a + b + c + d > -1");
  Inputs in;
  std::string p;
  for (std::size_t i = 0; i < 4; ++i) p += (i ? ";" : "") + format_number(a[i]);
  in.emplace_back("params", p);
  const BetaCheck b = beta_integral_check(a);
  add_check(report, "beta.dougall", in, format_number(b.dougall), format_number(b.closed),
            std::abs(b.dougall - b.closed) / std::abs(b.closed), cfg.tol);
  add_check(report, "beta.quadrature", in, format_number(b.quadrature), format_number(b.closed),
            std::abs(b.quadrature - b.closed) / std::abs(b.closed), std::max(cfg.tol, 1e-4));
}

void cmd_mass(const RunConfig& cfg, Report& report) {
  const ParamMultiset p = four_params(cfg);
  const QContext ctx = make_context(cfg);
  // Validates |q abcd| < 1 before summing.
  const DiscreteOrthoSpec spec(Family(FamilyTag::AskeyWilson4, p), cplx{cfg.alpha, 0.0}, 0, ctx);
  Inputs in = base_inputs(cfg);
  in.emplace_back("alpha", format_number(cfg.alpha));
  const auto [direct, closed] = total_mass(p, cplx{cfg.alpha, 0.0}, ctx);
  add_check(report, "mass", in, format_number(direct), format_number(closed),
            rel_diff(direct, closed), cfg.tol);
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--family", cfg.family, "aw, dh, asc, bigh or hermite");
  sub->add_option("--q", cfg.q, "base q in (0, 1)");
  sub->add_option("--alpha", cfg.alpha, "lattice offset / weight parameter");
  sub->add_option("--params", cfg.params_text, "parameters: 're' or 're,im' items separated by ';'");
  sub->add_option("--tol", cfg.tol, "pass threshold for defects")->each([&cfg](const std::string&) {
    cfg.tol_given = true;
  });
  const std::map<std::string, OutputFormat> formats{
      {"human", OutputFormat::Human}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};
  sub->add_option("--output", cfg.output, "human, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Numerical verification for q^{-1}-symmetric Askey-scheme polynomials", "qaskey"};
  app.require_subcommand(1);

  std::string z_text;
  std::string x_text;
  std::string only_text;

  auto* eval = app.add_subcommand("eval", "evaluate a polynomial in every representation");
  add_common(eval, cfg);
  eval->add_option("--n", cfg.n, "degree");
  eval->add_option("--z", z_text, "point z ('re' or 're,im')");
  eval->add_option("--x", x_text, "point x = (z - 1/z)/2 ('re' or 're,im')");
  eval->add_option("--rep", cfg.rep, "all, canonical, first or second")
      ->check(CLI::IsMember({"all", "canonical", "first", "second"}));

  auto* gram_cmd = app.add_subcommand("gram", "discrete Gram matrix against the closed norms");
  add_common(gram_cmd, cfg);
  gram_cmd->add_option("--max-degree", cfg.max_degree, "largest degree N");

  auto* cont = app.add_subcommand("cont-gram", "continuous Gram matrix against the closed norms");
  add_common(cont, cfg);
  cont->add_option("--max-degree", cfg.max_degree, "largest degree N");

  auto* qbeta = app.add_subcommand("qbeta", "q-beta integral: quadrature against closed form");
  add_common(qbeta, cfg);

  auto* beta = app.add_subcommand("beta", "beta integral: quadrature, 5H5 sum and closed form");
  add_common(beta, cfg);

  auto* mass = app.add_subcommand("mass", "total mass: bilateral sum against product");
  add_common(mass, cfg);

  auto* suite = app.add_subcommand("suite", "seeded battery of every check");
  add_common(suite, cfg);
  suite->add_option("--seed", cfg.seed, "seed for the random parameter grids");
  suite->add_option("--only", only_text, "comma-separated groups to run");

  for (auto* sub : {eval, gram_cmd, cont, qbeta, beta, mass}) {
    sub->add_option("--m", cfg.m, "second degree (unused by most commands)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  if (cfg.command == "cont-gram" && cont->count("--max-degree") == 0) cfg.max_degree = 3;

  Report report;
  const auto start = std::chrono::steady_clock::now();
  try {
    cfg.params = parse_params(cfg.params_text);
    if (!z_text.empty()) {
      cfg.z = parse_complex(z_text);
      cfg.z_given = true;
    }
    if (!x_text.empty()) {
      cfg.x = parse_complex(x_text);
      cfg.x_given = true;
    }
    if (!only_text.empty()) {
      std::stringstream ss(only_text);
      std::string item;
      const auto& groups = suite_groups();
      while (std::getline(ss, item, ',')) {
        if (std::find(groups.begin(), groups.end(), item) == groups.end()) {
          throw DomainError("unknown suite group: " + item);
        }
        cfg.only.push_back(item);
      }
    }
    if (!(cfg.tol > 0.0)) throw DomainError("--tol must be positive");

    if (cfg.command == "eval") cmd_eval(cfg, report);
    else if (cfg.command == "gram") cmd_gram(cfg, report);
    else if (cfg.command == "cont-gram") cmd_cont_gram(cfg, report);
    else if (cfg.command == "qbeta") cmd_qbeta(cfg, report);
    else if (cfg.command == "beta") cmd_beta(cfg, report);
    else if (cfg.command == "mass") cmd_mass(cfg, report);
    else if (cfg.command == "suite") run_suite(cfg, report);
  } catch (const DomainError& e) {
    err << "qaskey: invalid configuration: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "qaskey: invalid configuration: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "qaskey: invalid configuration: number out of range\n";
    return 2;
  } catch (const Error& e) {
    add_check(report, cfg.command + ".error", {}, e.what(), "", INFINITY, cfg.tol);
  }
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  write_report(report, cfg, cfg.output, out);
  const bool all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                    [](const CheckRecord& c) { return c.pass; });
  return all_pass ? 0 : 1;
}

}  // namespace qaskey::cli
