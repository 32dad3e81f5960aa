#include "qaskey/ortho_continuous.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qaskey/error.hpp"
#include "qaskey/gamma.hpp"
#include "qaskey/qhyper.hpp"

namespace qaskey {

namespace {

constexpr double kPi = std::numbers::pi;

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be a positive real number");
  }
}

LogComplex products_or_throw(std::span<const cplx> as, const QContext& ctx) {
  const auto r = qpoch_product_infinite(as, ctx);
  if (!r.converged) throw ConvergenceError("infinite product did not converge; raise max_terms");
  return r.value;
}

void require_aw_bound(const Family& fam, int degree, const QContext& ctx) {
  if (fam.tag() != FamilyTag::AskeyWilson4) return;
  const double lhs = std::abs(fam.params().product());
  const double rhs = std::pow(std::abs(ctx.q()), 2.0 * degree - 1.0);
  if (!(lhs < rhs)) {
    throw DomainError("Askey-Wilson continuous relation needs |abcd| < |q|^{2N-1} for N = " +
                      std::to_string(degree));
  }
}

// Node-level products are evaluated with eps_term well below the gate.
QContext node_context(const QContext& ctx) {
  return ctx.with_eps_term(std::min(ctx.eps_term(), ctx.eps_verify() * 1e-2));
}

double gate_tol(const QContext& ctx) {
  return std::clamp(ctx.eps_verify() * 1e-3, 1e-13, 1e-9);
}

QuadratureSpec real_line_spec(double alpha, const QContext& ctx) {
  const double q = ctx.real_q();
  QuadratureSpec s;
  s.decay_q = q;
  // peak of q^{2x^2 - x} alpha^{4x}
  s.center = 0.25 - std::log(alpha) / std::log(q);
  s.tol = gate_tol(ctx);
  return s;
}

// (-q alpha' a, q a / alpha'; q)_inf over the family parameters.
LogComplex shift_products(const Family& fam, double alpha, const QContext& ctx) {
  std::vector<cplx> as;
  for (const cplx& a : fam.params()) {
    as.push_back(-ctx.q() * alpha * a);
    as.push_back(ctx.q() * a / alpha);
  }
  return products_or_throw(as, ctx);
}

}  // namespace

LogComplex continuous_weight_log(const WeightSpec& w, double x, const QContext& ctx) {
  require_alpha(w.alpha);
  const double q = ctx.real_q();
  const double lq = std::log(q);
  const double qx = std::exp(x * lq);
  std::vector<cplx> as;
  for (const cplx& a : w.fam.params()) {
    as.push_back(-qx * q * w.alpha * a);
    as.push_back(q / qx * a / w.alpha);
  }
  const double gauss = (2.0 * x * x - x) * lq + 4.0 * x * std::log(w.alpha);
  const double head = std::log1p(qx * qx * w.alpha * w.alpha);
  return products_or_throw(as, ctx) * LogComplex(gauss + head, 0.0);
}

cplx continuous_weight(const WeightSpec& w, double x, const QContext& ctx) {
  return continuous_weight_log(w, x, ctx).value();
}

double k00(double alpha, const QContext& ctx) {
  require_alpha(alpha);
  const double q = ctx.real_q();
  const double t = -std::log(q);
  const double la = std::log(alpha);
  return std::sqrt(2.0 * kPi) * alpha * std::exp(2.0 * la * la / t) /
         (std::pow(q, 0.125) * std::sqrt(t));
}

double gaussian_power_integral(double a, double alpha) {
  require_alpha(alpha);
  const double la = std::log(alpha);
  return std::sqrt(kPi) * std::exp(0.25 * a * a * la * la);
}

QuadratureResult gaussian_power_integral_quadrature(double a, double alpha) {
  require_alpha(alpha);
  const double la = std::log(alpha);
  QuadratureSpec s;
  s.decay_q = std::exp(-0.5);  // e^{-x^2} = q^{2x^2}
  s.center = 0.5 * a * la;
  s.tol = 1e-13;
  return integrate_real_line([=](double x) { return cplx{std::exp(-x * x + a * x * la), 0.0}; },
                             s);
}

JIntegral j_integral(double alpha, const QContext& ctx) {
  require_alpha(alpha);
  const double q = ctx.real_q();
  const QContext nctx = node_context(ctx);
  const double lq = std::log(q);
  const double la = std::log(alpha);
  const auto qq = qpoch_infinite_log(q, ctx);
  if (!qq.converged) throw ConvergenceError("j_integral: (q; q)_inf did not converge");
  const double qinf = qq.value.value().real();

  JIntegral r;
  auto unit = [&](double x) {
    const double q2x = std::exp(2.0 * x * lq);
    const cplx as[] = {-q2x * alpha * alpha, -q / q2x / (alpha * alpha)};
    return (products_or_throw(as, nctx) *
            LogComplex((2.0 * x * x - x) * lq + 4.0 * x * la, 0.0))
        .value();
  };
  const auto u = integrate_interval(unit, 0.0, 1.0, gate_tol(ctx));
  auto line = [&](double x) {
    const double q2x = std::exp(2.0 * x * lq);
    return cplx{(1.0 + q2x * alpha * alpha) * std::exp((2.0 * x * x - x) * lq + 4.0 * x * la),
                0.0};
  };
  const auto l = integrate_real_line(line, real_line_spec(alpha, ctx));
  r.unit_interval = u.value;
  r.real_line = l.value / qinf;
  r.closed = k00(alpha, ctx) / qinf;
  r.converged = u.converged && l.converged;
  return r;
}

QuadratureResult continuous_inner(const Family& fam, double alpha, int m, int n,
                                  const QContext& ctx) {
  require_alpha(alpha);
  if (m < 0 || n < 0) throw DomainError("continuous_inner: degrees must be nonnegative");
  require_aw_bound(fam, std::max(m, n), ctx);
  const double lq = std::log(ctx.real_q());
  const QContext nctx = node_context(ctx);
  const WeightSpec w{fam, alpha};
  auto f = [&](double x) {
    const ZPoint pt(std::exp(x * lq) * alpha);
    const LogComplex v = continuous_weight_log(w, x, nctx) * eval_poly_log(fam, m, pt, nctx) *
                         eval_poly_log(fam, n, pt, nctx);
    return v.value();
  };
  return integrate_real_line(f, real_line_spec(alpha, ctx));
}

cplx continuous_closed_form(const Family& fam, double alpha, int n, const QContext& ctx) {
  require_alpha(alpha);
  require_aw_bound(fam, n, ctx);
  return (LogComplex::from(k00(alpha, ctx)) * norm_pair_factor(fam, ctx) *
          norm_finite_factor(fam, n, ctx))
      .value();
}

GramReport continuous_gram(const Family& fam, double alpha, int max_degree, const QContext& ctx) {
  if (max_degree < 0) throw DomainError("continuous_gram: max_degree must be nonnegative");
  require_aw_bound(fam, max_degree, ctx);
  const auto size = static_cast<std::size_t>(max_degree + 1);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::vector<cplx>> computed(size, std::vector<cplx>(size));
  std::vector<cplx> closed(size);
  std::vector<std::string> failures;
  for (int n = 0; n <= max_degree; ++n) {
    closed[static_cast<std::size_t>(n)] = continuous_closed_form(fam, alpha, n, ctx);
  }
  for (int m = 0; m <= max_degree; ++m) {
    for (int n = 0; n <= max_degree; ++n) {
      cplx& slot = computed[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
      try {
        const auto r = continuous_inner(fam, alpha, std::min(m, n), std::max(m, n), ctx);
        slot = r.value;
        if (!r.converged) {
          failures.push_back("entry (" + std::to_string(m) + "," + std::to_string(n) +
                             "): " + r.failure);
        }
      } catch (const Error& e) {
        slot = {nan, nan};
        failures.push_back("entry (" + std::to_string(m) + "," + std::to_string(n) +
                           "): " + e.what());
      }
    }
  }
  return make_gram_report(std::move(computed), std::move(closed), std::move(failures));
}

CorrespondenceReport discrete_to_continuous_check(const Family& fam, double alpha, int m, int n,
                                                  const QContext& ctx) {
  require_alpha(alpha);
  require_aw_bound(fam, std::max(m, n), ctx);
  CorrespondenceReport rep;
  const auto k = continuous_inner(fam, alpha, m, n, ctx);
  rep.real_line = k.value;

  const double lq = std::log(ctx.real_q());
  const double la = std::log(alpha);
  const QContext nctx = node_context(ctx);
  bool sums_ok = true;
  auto psi = [&](double y) {
    const double shifted = std::exp(y * lq) * alpha;
    const DiscreteOrthoSpec spec(fam, shifted, std::max(m, n), nctx);
    const auto s = discrete_inner(spec, m, n);
    sums_ok = sums_ok && s.converged;
    const LogComplex pref = shift_products(fam, shifted, nctx) *
                            LogComplex((2.0 * y * y - y) * lq + 4.0 * y * la, 0.0);
    return pref.value() * s.value;
  };
  rep.scale = std::sqrt(std::abs(continuous_closed_form(fam, alpha, m, ctx)) *
                        std::abs(continuous_closed_form(fam, alpha, n, ctx)));
  const auto u = integrate_interval(psi, 0.0, 1.0, gate_tol(ctx), 1024, rep.scale);
  rep.unit_interval = u.value;
  rep.defect = std::abs(rep.real_line - rep.unit_interval) / rep.scale;
  rep.converged = k.converged && u.converged && sums_ok;
  return rep;
}

std::pair<cplx, cplx> qbeta_integral(double alpha, const ParamMultiset& params4,
                                     const QContext& ctx) {
  require_alpha(alpha);
  if (params4.size() != 4) throw DomainError("qbeta_integral: four parameters required");
  if (!(std::abs(params4.product()) < 1.0 / std::abs(ctx.q()))) {
    throw DomainError("qbeta_integral: requires |abcd| < |q|^{-1}");
  }
  const Family fam(FamilyTag::AskeyWilson4, params4);
  const QContext nctx = node_context(ctx);
  const WeightSpec w{fam, alpha};
  const auto r = integrate_real_line(
      [&](double x) { return continuous_weight_log(w, x, nctx).value(); },
      real_line_spec(alpha, ctx));
  if (!r.converged) throw ConvergenceError("qbeta_integral: " + r.failure);
  const cplx closed = (LogComplex::from(k00(alpha, ctx)) * norm_pair_factor(fam, ctx)).value();
  return {r.value, closed};
}

BetaCheck beta_integral_check(const std::array<double, 4>& a) {
  const double sum = a[0] + a[1] + a[2] + a[3];
  if (!(sum > -1.0)) throw DomainError("beta_integral_check: requires a + b + c + d > -1");
  BetaCheck r;
  // 1/(Gamma(2x) Gamma(-2x)) = -2x sin(2 pi x) / pi; the integrand is even.
  auto f = [&](double x) {
    double v = -2.0 / kPi * x * sin_pi(2.0 * x);
    for (double ai : a) v *= recip_gamma_pair(ai, x);
    return v;
  };
  const auto quad = integrate_oscillatory(f, 1.0, 1e-9);
  r.quadrature = 2.0 * quad.value.real();
  r.quadrature_tail = 2.0 * quad.tail_bound;
  const auto d = dougall_5h5(a);
  r.dougall = d.direct.value;
  double den = 1.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) den *= std::tgamma(1.0 + a[i] + a[j]);
  }
  r.closed = -std::tgamma(1.0 + sum) / den / (2.0 * kPi * kPi);
  r.converged = quad.converged && d.direct.converged;
  return r;
}

double sin4_integral() {
  auto f = [](double x) {
    const double s = sin_pi(x);
    if (x == 0.0) return 0.0;
    return sin_pi(2.0 * x) * s * s * s * s / (x * x * x);
  };
  return 2.0 * integrate_oscillatory(f, 1.0, 1e-12).value.real();
}

std::pair<double, double> ramanujan_fourier_pair(double a, double t) {
  if (!(a > -0.5)) throw DomainError("ramanujan_fourier_pair: requires a > -1/2");
  auto f = [=](double x) { return std::cos(x * t) * recip_gamma_pair(a, x); };
  const auto quad = integrate_oscillatory(f, 4.0, 1e-10);
  const double closed = std::abs(t) < kPi
                            ? std::pow(2.0 * std::cos(0.5 * t), 2.0 * a) / std::tgamma(2.0 * a + 1.0)
                            : 0.0;
  return {2.0 * quad.value.real(), closed};
}

std::vector<double> t_constant_probe(const std::vector<double>& qs) {
  std::vector<double> out;
  out.reserve(qs.size());
  for (double q : qs) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("t_constant_probe: q must lie in (0, 1)");
    const double t = -std::log(q);
    const int terms = static_cast<int>(std::min(5e7, 50.0 / t + 1000.0));
    const QContext ctx = QContext(q).with_max_terms(std::max(terms, 10'000));
    const auto p = qpoch_infinite_log(q, ctx);
    if (!p.converged) throw ConvergenceError("t_constant_probe: (q; q)_inf did not converge");
    out.push_back(
        std::exp(-kPi * kPi / (2.0 * t) - 3.0 * p.value.log_mag() - 1.5 * std::log1p(-q)));
  }
  return out;
}

}  // namespace qaskey
