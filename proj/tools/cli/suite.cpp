#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "cli.hpp"
#include "qaskey/error.hpp"
#include "qaskey/gamma.hpp"
#include "qaskey/ortho_continuous.hpp"
#include "qaskey/ortho_discrete.hpp"
#include "qaskey/qhyper.hpp"
#include "qaskey/qpolys.hpp"

namespace qaskey::cli {

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;
using Rng = std::mt19937_64;

constexpr double kPi = std::numbers::pi;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Open interval (lo, hi).
double open_uniform(Rng& rng, double lo, double hi) {
  double v;
  do v = uniform(rng, lo, hi);
  while (v == lo);
  return v;
}

std::vector<cplx> draw_params(Rng& rng, std::size_t count, double hi) {
  std::vector<cplx> p;
  for (std::size_t i = 0; i < count; ++i) p.emplace_back(open_uniform(rng, 0.0, hi), 0.0);
  return p;
}

double rel_diff(cplx a, cplx b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

std::string join(const std::vector<cplx>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ";" : "") + format_number(p[i]);
  return s;
}

struct Ctx {
  const RunConfig& cfg;
  Report& report;

  // The criterion's own threshold unless --tol was given; `floor` keeps
  // documented slow paths from being tightened past what they can reach.
  double tol(double def, double floor = 0.0) const {
    return cfg.tol_given ? std::max(cfg.tol, floor) : def;
  }
  void check(std::string name, Inputs in, cplx computed, cplx reference, double defect,
             double t) {
    add_check(report, std::move(name), std::move(in), format_number(computed),
              format_number(reference), defect, t);
  }
  void fail(std::string name, const std::string& why, double t) {
    add_check(report, std::move(name), {}, why, "", INFINITY, t);
  }
};

// Representation equivalence on random points.
void group_reps(Ctx& c, Rng& rng) {
  const double t = c.tol(1e-10);
  struct Worst {
    double d = 0.0;
    cplx a, b;
    Inputs in;
  };
  Worst aw, dh;
  for (int s = 0; s < 100; ++s) {
    const double q = uniform(rng, 0.2, 0.8);
    const auto p = draw_params(rng, 4, 0.6);
    const double z = uniform(rng, 0.5, 2.0);
    const QContext ctx(q);
    const ZPoint pt(z);
    const Family fa(FamilyTag::AskeyWilson4, ParamMultiset(p));
    const Family fd(FamilyTag::DualHahn3, ParamMultiset({p[0], p[1], p[2]}));
    for (int n = 0; n <= 6; ++n) {
      auto probe = [&](const Family& f, Worst& w) {
        const cplx a = eval_poly(f, n, pt, ctx, Rep::First);
        const cplx b = eval_poly(f, n, pt, ctx, Rep::Second);
        const double d = rel_diff(a, b);
        if (d >= w.d) {
          w = {d, a, b,
               {{"q", format_number(q)}, {"params", join(p)}, {"z", format_number(z)},
                {"n", std::to_string(n)}}};
        }
      };
      probe(fa, aw);
      probe(fd, dh);
    }
  }
  c.check("reps.aw", aw.in, aw.a, aw.b, aw.d, t);
  c.check("reps.dh", dh.in, dh.a, dh.b, dh.d, t);
}

void group_symmetry(Ctx& c, Rng& rng) {
  double worst = 0.0;
  cplx wa, wb;
  Inputs win;
  for (int s = 0; s < 20; ++s) {
    const double q = uniform(rng, 0.2, 0.8);
    auto p = draw_params(rng, 4, 0.6);
    const double z = uniform(rng, 0.5, 2.0);
    const QContext ctx(q);
    const ZPoint pt(z);
    std::array<int, 4> idx{0, 1, 2, 3};
    for (int n = 0; n <= 5; ++n) {
      const cplx ref = eval_poly(Family(FamilyTag::AskeyWilson4, ParamMultiset(p)), n, pt, ctx);
      std::sort(idx.begin(), idx.end());
      do {
        const ParamMultiset perm({p[idx[0]], p[idx[1]], p[idx[2]], p[idx[3]]});
        // as given, so each ordering really reaches the formulas
        const cplx v = eval_poly(Family(FamilyTag::AskeyWilson4, perm), n, pt, ctx,
                                 Rep::Canonical, Orientation::AsGiven);
        const double d = rel_diff(v, ref);
        if (d >= worst) {
          worst = d;
          wa = v;
          wb = ref;
          win = {{"q", format_number(q)}, {"params", join(p)}, {"z", format_number(z)},
                 {"n", std::to_string(n)},
                 {"order", std::to_string(idx[0]) + std::to_string(idx[1]) +
                               std::to_string(idx[2]) + std::to_string(idx[3])}};
        }
      } while (std::next_permutation(idx.begin(), idx.end()));
    }
  }
  c.check("symmetry.aw", win, wa, wb, worst, c.tol(1e-10));
}

void group_discrete(Ctx& c, Rng& rng) {
  const double t = c.tol(1e-8);
  for (double q : {0.3, 0.5, 0.7}) {
    for (FamilyTag tag : {FamilyTag::AskeyWilson4, FamilyTag::DualHahn3,
                          FamilyTag::AlSalamChihara2, FamilyTag::BigHermite1,
                          FamilyTag::Hermite0}) {
      const auto p = draw_params(rng, arity(tag), 0.5);
      const Family fam(tag, ParamMultiset(p));
      const QContext ctx(q);
      const int N = std::min(5, DiscreteOrthoSpec::admissible_degree(fam, ctx));
      const std::string name =
          "discrete." + std::string(family_name(tag)) + ".q" + format_number(q);
      Inputs in{{"q", format_number(q)}, {"params", join(p)}, {"alpha", "1"},
                {"N", std::to_string(N)}};
      if (N < 0) {
        c.fail(name, "no admissible degree", t);
        continue;
      }
      const GramReport g = gram(DiscreteOrthoSpec(fam, 1.0, N, ctx));
      if (!g.failures.empty()) {
        c.fail(name, g.failures.front(), t);
        continue;
      }
      c.check(name + ".offdiag", in, g.worst_offdiag, 0.0, g.worst_offdiag, t);
      c.check(name + ".diag", in, g.worst_diag, 0.0, g.worst_diag, t);
    }
  }
}

void group_mass(Ctx& c, Rng& rng) {
  double worst = 0.0;
  cplx wa, wb;
  Inputs win;
  for (int s = 0; s < 20;) {
    const double q = uniform(rng, 0.2, 0.8);
    const auto p = draw_params(rng, 4, 1.0);
    const double alpha = uniform(rng, 0.8, 1.5);
    const ParamMultiset ms(p);
    if (!(std::abs(q * ms.product()) < 0.5)) continue;
    ++s;
    const auto [direct, closed] = total_mass(ms, alpha, QContext(q));
    const double d = rel_diff(direct, closed);
    if (d >= worst) {
      worst = d;
      wa = direct;
      wb = closed;
      win = {{"q", format_number(q)}, {"params", join(p)}, {"alpha", format_number(alpha)}};
    }
  }
  c.check("mass", win, wa, wb, worst, c.tol(1e-10));
}

void group_hermite_cont(Ctx& c, Rng&) {
  const double q = 0.5;
  const QContext ctx(q);
  const double t = c.tol(1e-8);
  const GramReport g = continuous_gram(Family::hermite(), 1.0, 4, ctx);
  double worst_diag = 0.0;
  double worst_off = 0.0;
  std::vector<double> h(5);
  double qq = 1.0;  // (q; q)_n
  for (int n = 0; n <= 4; ++n) {
    if (n > 0) qq *= 1.0 - std::pow(q, n);
    h[static_cast<std::size_t>(n)] = std::pow(q, -0.5 * n * (n - 1)) * qq *
                                     std::pow(q, -n - 0.125) * std::sqrt(2.0 * kPi / std::log(2.0));
  }
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 4; ++n) {
      const cplx v = g.computed[m][n];
      if (m == n) {
        worst_diag = std::max(worst_diag, std::abs(v - h[n]) / h[n]);
      } else {
        worst_off = std::max(worst_off, std::abs(v) / std::sqrt(h[m] * h[n]));
      }
    }
  }
  if (!g.failures.empty()) worst_diag = INFINITY;
  const Inputs in{{"q", "0.5"}, {"alpha", "1"}, {"N", "4"}};
  c.check("hermite-cont.diag", in, worst_diag, 0.0, worst_diag, t);
  c.check("hermite-cont.offdiag", in, worst_off, 0.0, worst_off, t);
}

void group_jint(Ctx& c, Rng&) {
  for (double alpha : {1.0, 2.0}) {
    for (double q : {0.3, 0.5}) {
      const JIntegral j = j_integral(alpha, QContext(q));
      const double d = std::max({rel_diff(j.unit_interval, j.closed),
                                 rel_diff(j.real_line, j.closed),
                                 rel_diff(j.unit_interval, j.real_line)});
      c.check("jint.alpha" + format_number(alpha) + ".q" + format_number(q),
              {{"alpha", format_number(alpha)}, {"q", format_number(q)},
               {"real_line", format_number(j.real_line)}},
              j.unit_interval, j.closed, j.converged ? d : INFINITY, c.tol(1e-9));
    }
  }
}

void group_qbeta(Ctx& c, Rng& rng) {
  double worst = 0.0;
  cplx wa, wb;
  Inputs win;
  for (int s = 0; s < 10;) {
    const double q = uniform(rng, 0.2, 0.8);
    const auto p = draw_params(rng, 4, 1.0);
    const ParamMultiset ms(p);
    if (!(std::abs(ms.product()) < 0.5 / q)) continue;
    ++s;
    for (double alpha : {1.0, 1.5}) {
      const auto [quad, closed] = qbeta_integral(alpha, ms, QContext(q));
      const double d = rel_diff(quad, closed);
      if (d >= worst) {
        worst = d;
        wa = quad;
        wb = closed;
        win = {{"q", format_number(q)}, {"params", join(p)}, {"alpha", format_number(alpha)}};
      }
    }
  }
  c.check("qbeta", win, wa, wb, worst, c.tol(1e-8));
}

void group_correspondence(Ctx& c, Rng& rng) {
  const double q = 0.5;
  const QContext ctx(q);
  for (FamilyTag tag : {FamilyTag::Hermite0, FamilyTag::BigHermite1,
                        FamilyTag::AlSalamChihara2, FamilyTag::DualHahn3,
                        FamilyTag::AskeyWilson4}) {
    std::vector<cplx> p;
    do p = draw_params(rng, arity(tag), 0.5);
    while (tag == FamilyTag::AskeyWilson4 &&
           !(std::abs(ParamMultiset(p).product()) < std::pow(q, 5.0)));
    const Family fam(tag, ParamMultiset(p));
    double worst = 0.0;
    cplx wa, wb;
    bool ok = true;
    for (int m = 0; m <= 3; ++m) {
      for (int n = m; n <= 3; ++n) {
        const auto r = discrete_to_continuous_check(fam, 1.0, m, n, ctx);
        ok = ok && r.converged;
        if (r.defect >= worst) {
          worst = r.defect;
          wa = r.real_line;
          wb = r.unit_interval;
        }
      }
    }
    c.check("correspondence." + std::string(family_name(tag)),
            {{"q", "0.5"}, {"alpha", "1"}, {"params", join(p)}, {"N", "3"}}, wa, wb,
            ok ? worst : INFINITY, c.tol(1e-7));
  }
}

void group_beta(Ctx& c, Rng&) {
  const BetaCheck b = beta_integral_check({0.1, 0.2, 0.3, 0.4});
  const Inputs in{{"params", "0.1;0.2;0.3;0.4"}};
  c.check("beta.dougall", in, b.dougall, b.closed, std::abs(b.dougall - b.closed) / std::abs(b.closed),
          c.tol(1e-9));
  c.check("beta.quadrature", in, b.quadrature, b.closed,
          b.converged ? std::abs(b.quadrature - b.closed) / std::abs(b.closed) : INFINITY,
          c.tol(1e-4, 1e-4));
  const BetaCheck z = beta_integral_check({0.0, 0.0, 0.0, 0.0});
  const double ref = -1.0 / (2.0 * kPi * kPi);
  c.check("beta.zero.dougall", {{"params", "0;0;0;0"}}, z.dougall, ref,
          std::abs(z.dougall - ref) / std::abs(ref), c.tol(1e-9));
  c.check("beta.zero.closed", {{"params", "0;0;0;0"}}, z.closed, ref,
          std::abs(z.closed - ref) / std::abs(ref), c.tol(1e-9));
  const double s4 = sin4_integral();
  const double pi3 = kPi * kPi * kPi / 4.0;
  c.check("beta.sin4", {}, s4, pi3, std::abs(s4 - pi3), c.tol(1e-6, 1e-6));
}

void group_fourier(Ctx& c, Rng&) {
  for (auto [a, t] : {std::pair{0.5, 0.0}, {1.0, kPi / 2.0}, {1.0, 3.5}}) {
    const auto [quad, closed] = ramanujan_fourier_pair(a, t);
    c.check("fourier.a" + format_number(a) + ".t" + format_number(t),
            {{"a", format_number(a)}, {"t", format_number(t)}}, quad, closed,
            std::abs(quad - closed), c.tol(1e-6, 1e-6));
  }
}

void group_tconst(Ctx& c, Rng&) {
  const std::vector<double> qs{0.9, 0.99, 0.999};
  const auto v = t_constant_probe(qs);
  Inputs in;
  for (std::size_t i = 0; i < qs.size(); ++i) in.emplace_back("T(" + format_number(qs[i]) + ")", format_number(v[i]));
  c.check("tconst.q0.999", in, v.back(), kTLimit, std::abs(v.back() - kTLimit), c.tol(5e-3, 5e-3));
}

void group_qgamma(Ctx& c, Rng&) {
  const QContext ctx = QContext(0.999).with_max_terms(200'000);
  for (double x : {0.5, 1.5, 2.5}) {
    const double g = qgamma(x, ctx);
    const double ref = std::tgamma(x);
    c.check("qgamma.x" + format_number(x), {{"q", "0.999"}, {"x", format_number(x)}}, g, ref,
            std::abs(g - ref) / ref, c.tol(5e-3, 5e-3));
  }
}

// Size of P_n over the sampled z range; defects are taken relative to it.
double poly_scale(const Family& fam, int n, const QContext& ctx) {
  double m = 0.0;
  for (int i = 0; i <= 8; ++i) {
    m = std::max(m, std::abs(eval_poly(fam, n, ZPoint(0.5 + 1.5 * i / 8.0), ctx)));
  }
  return m;
}

void group_limit(Ctx& c, Rng& rng) {
  const double h = 1e-6;
  for (FamilyTag sub : {FamilyTag::DualHahn3, FamilyTag::AlSalamChihara2,
                        FamilyTag::BigHermite1, FamilyTag::Hermite0}) {
    double worst = 0.0;
    double worst_ratio = 0.0;
    cplx wa, wb;
    Inputs win;
    Inputs rin;
    for (int s = 0; s < 10; ++s) {
      const double q = uniform(rng, 0.2, 0.8);
      const auto p = draw_params(rng, arity(sub), 0.6);
      const double z = uniform(rng, 0.5, 2.0);
      const QContext ctx(q);
      const Family fam(sub, ParamMultiset(p));
      for (int n = 0; n <= 4; ++n) {
        const cplx lim = eval_via_limit_chain(fam, n, ZPoint(z), ctx, h);
        const cplx ref = eval_poly(fam, n, ZPoint(z), ctx);
        const double scale = std::max(std::abs(ref), poly_scale(fam, n, ctx));
        const double d = std::abs(lim - ref) / scale;
        if (d >= worst) {
          worst = d;
          wa = lim;
          wb = ref;
          win = {{"q", format_number(q)}, {"params", join(p)}, {"z", format_number(z)},
                 {"n", std::to_string(n)}, {"h", format_number(h)}};
        }
        // gap per decade of h should shrink by a factor of ten
        double gaps[3];
        for (int k = 0; k < 3; ++k) {
          gaps[k] = std::abs(eval_via_limit_chain(fam, n, ZPoint(z), ctx, std::pow(10.0, -3 - k)) -
                             ref);
        }
        if (gaps[2] <= 1e-12 * scale) continue;
        // the 1e-3 decade is reported but can still carry the quadratic term
        const double r = std::abs(std::log10(gaps[1] / gaps[2]) - 1.0);
        if (r >= worst_ratio) {
          worst_ratio = r;
          rin = {{"q", format_number(q)}, {"params", join(p)}, {"z", format_number(z)},
                 {"n", std::to_string(n)}, {"ratio_1e-3", format_number(gaps[0] / gaps[1])},
                 {"ratio_1e-4", format_number(gaps[1] / gaps[2])}};
        }
      }
    }
    const std::string name(family_name(sub));
    c.check("limit." + name, win, wa, wb, worst, c.tol(1e-4, 1e-4));
    c.check("limit." + name + ".decade", rin, cplx{worst_ratio}, cplx{0.0}, worst_ratio,
            0.1);
  }
}

using GroupFn = void (*)(Ctx&, Rng&);

const std::vector<std::pair<std::string, GroupFn>>& registry() {
  static const std::vector<std::pair<std::string, GroupFn>> r{
      {"reps", group_reps},
      {"symmetry", group_symmetry},
      {"discrete", group_discrete},
      {"mass", group_mass},
      {"hermite-cont", group_hermite_cont},
      {"jint", group_jint},
      {"qbeta", group_qbeta},
      {"correspondence", group_correspondence},
      {"beta", group_beta},
      {"fourier", group_fourier},
      {"tconst", group_tconst},
      {"qgamma", group_qgamma},
      {"limit", group_limit},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_groups() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

void run_suite(const RunConfig& cfg, Report& report) {
  Ctx c{cfg, report};
  std::uint64_t index = 0;
  for (const auto& [name, fn] : registry()) {
    ++index;
    if (!cfg.only.empty() && std::find(cfg.only.begin(), cfg.only.end(), name) == cfg.only.end()) {
      continue;
    }
    // One stream per group so that --only reproduces the full run's values.
    Rng rng(cfg.seed * 0x9E3779B97F4A7C15ULL + index);
    try {
      fn(c, rng);
    } catch (const Error& e) {
      c.fail(name + ".error", e.what(), 0.0);
    }
  }
}

}  // namespace qaskey::cli
