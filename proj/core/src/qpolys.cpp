#include "qaskey/qpolys.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "qaskey/error.hpp"
#include "qaskey/qhyper.hpp"

namespace qaskey {

namespace {

constexpr cplx kI{0.0, 1.0};

LogComplex lc(cplx z) { return LogComplex::from(z); }

// prod over `as` of (a; q)_n, refusing vanishing factors.
LogComplex checked_poch(std::initializer_list<cplx> as, const QContext& ctx, int n) {
  LogComplex r;
  for (const cplx& a : as) {
    cplx t = a;
    for (int j = 0; j < n; ++j) {
      const cplx f = 1.0 - t;
      if (std::abs(f) <= 1e-14 * std::max(1.0, std::abs(t))) {
        throw PoleError("representation prefactor vanishes (a q^" + std::to_string(j) + " = 1)",
                        j);
      }
      r *= lc(f);
      t *= ctx.q();
    }
  }
  return r;
}

LogComplex phi(std::vector<cplx> num, std::vector<cplx> den, cplx z, const QContext& ctx) {
  return phi_terminating_log(PhiSpec(std::move(num), std::move(den), z, ctx), ctx);
}

using xc = std::complex<long double>;

xc ipow(xc b, long e) {
  if (e < 0) return 1.0L / ipow(b, -e);
  xc r{1.0L, 0.0L};
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

cplx narrow(xc v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// q^{qexp} base^n prod (poch; q)_n  rphis(num; den; q, arg), terminating at degree n.
struct Plan {
  long qexp = 0;
  xc base{1.0L, 0.0L};
  std::vector<xc> poch;
  std::vector<xc> num;
  std::vector<xc> den;
  xc arg;
};

void check_factor(xc f, xc t, int j) {
  if (std::abs(f) <= 1e-14L * std::max(1.0L, std::abs(t))) {
    throw PoleError("representation factor vanishes (a q^" + std::to_string(j) + " = 1)", j);
  }
}

// Direct summation in extended precision. Non-finite on overflow.
xc run_ext(const Plan& p, int n, xc q) {
  xc pref = ipow(q, p.qexp) * ipow(p.base, n);
  for (const xc& a : p.poch) {
    xc t = a;
    for (int j = 0; j < n; ++j) {
      const xc f = 1.0L - t;
      check_factor(f, t, j);
      pref *= f;
      t *= q;
    }
  }
  const long extra = 1 + static_cast<long>(p.den.size()) - static_cast<long>(p.num.size());
  xc sum{1.0L, 0.0L};
  xc term{1.0L, 0.0L};
  xc qk{1.0L, 0.0L};
  for (int k = 0; k < n; ++k) {
    xc r = p.arg * ipow(-qk, extra);
    for (const xc& a : p.num) r *= 1.0L - a * qk;
    xc d = 1.0L - qk * q;
    for (const xc& b : p.den) {
      const xc f = 1.0L - b * qk;
      check_factor(f, b * qk, k);
      d *= f;
    }
    term *= r / d;
    sum += term;
    qk *= q;
  }
  return pref * sum;
}

LogComplex run_log(const Plan& p, int n, const QContext& ctx) {
  auto down = [](const std::vector<xc>& v) {
    std::vector<cplx> out;
    out.reserve(v.size());
    for (const xc& x : v) out.push_back(narrow(x));
    return out;
  };
  LogComplex pref = ctx.log_pow(static_cast<double>(p.qexp)) *
                    lc(narrow(p.base)).pow(static_cast<long>(n));
  for (const xc& a : p.poch) pref *= checked_poch({narrow(a)}, ctx, n);
  return pref * phi(down(p.num), down(p.den), narrow(p.arg), ctx);
}

long c2(int n) { return static_cast<long>(binom2(n)); }

Plan aw_first(int n, xc q, xc z, xc a, xc b, xc c, xc d) {
  const xc p1 = -1.0L / (a * b), p2 = -1.0L / (a * c), p3 = -1.0L / (a * d);
  return {-3 * c2(n), -a * a * b * c * d, {p1, p2, p3},
          {ipow(q, -n), ipow(q, n - 1) / (a * b * c * d), z / a, -1.0L / (a * z)},
          {p1, p2, p3}, q};
}

Plan aw_second(int n, xc q, xc z, xc a, xc b, xc c, xc d) {
  const xc q1n = ipow(q, 1 - n);
  return {-3 * c2(n), -a * b * c * d * z,
          {-1.0L / (a * b), -1.0L / (c * z), -1.0L / (d * z)},
          {ipow(q, -n), z / a, z / b, -q1n * c * d},
          {-1.0L / (a * b), -q1n * c * z, -q1n * d * z}, q};
}

Plan dh_first(int n, xc q, xc z, xc a, xc b, xc c) {
  const xc q1n = ipow(q, 1 - n);
  return {-c2(n), -a, {z / a, -1.0L / (a * z)},
          {ipow(q, -n), -q1n * a * b, -q1n * a * c}, {-q1n * a * z, q1n * a / z}, q};
}

Plan dh_second(int n, xc q, xc z, xc a, xc b, xc c) {
  return {-2 * c2(n), -a * b * c, {-1.0L / (a * b), -1.0L / (a * c)},
          {ipow(q, -n), z / a, -1.0L / (a * z)}, {-1.0L / (a * b), -1.0L / (a * c)},
          -ipow(q, n) / (b * c)};
}

Plan asc(int n, xc q, xc z, xc a, xc b) {
  return {-c2(n), -b, {-1.0L / (a * b)}, {ipow(q, -n), z / a, -1.0L / (a * z)},
          {-1.0L / (a * b)}, ipow(q, n) * a / b};
}

Plan big_hermite_first(int n, xc q, xc z, xc a) {
  return {0, -1.0L / a, {}, {ipow(q, -n), z / a, -1.0L / (a * z)}, {}, -ipow(q, n) * a * a};
}

Plan big_hermite_second(int n, xc q, xc z, xc a) {
  return {0, z, {}, {ipow(q, -n), -1.0L / (a * z)}, {xc{}}, q * a / z};
}

Plan hermite(int n, xc q, xc z) {
  return {0, z, {}, {ipow(q, -n)}, {xc{}}, -q / (z * z)};
}

Plan make_plan(const Family& fam, int n, const ZPoint& pt, const QContext& ctx, Rep rep,
               Orientation orient) {
  if (n < 0) throw DomainError("eval_poly: degree must be nonnegative");
  if (n > ctx.degree_cap()) {
    throw DomainError("eval_poly: degree " + std::to_string(n) + " exceeds the cap " +
                      std::to_string(ctx.degree_cap()));
  }
  if (rep == Rep::Second && representation_count(fam.tag()) < 2) {
    throw DomainError("eval_poly: family has a single representation");
  }
  const xc z(pt.z());
  const xc q(ctx.q());
  std::vector<cplx> p(fam.params().begin(), fam.params().end());
  if (orient == Orientation::LargestFirst) {
    std::stable_sort(p.begin(), p.end(), [](cplx u, cplx v) {
      if (std::abs(u) != std::abs(v)) return std::abs(u) > std::abs(v);
      if (u.real() != v.real()) return u.real() > v.real();
      return u.imag() > v.imag();
    });
  }
  std::vector<xc> x(p.begin(), p.end());
  const bool first = rep == Rep::First;
  switch (fam.tag()) {
    case FamilyTag::AskeyWilson4:
      return first ? aw_first(n, q, z, x[0], x[1], x[2], x[3])
                   : aw_second(n, q, z, x[0], x[1], x[2], x[3]);
    case FamilyTag::DualHahn3:
      return first ? dh_first(n, q, z, x[0], x[1], x[2]) : dh_second(n, q, z, x[0], x[1], x[2]);
    case FamilyTag::AlSalamChihara2: return asc(n, q, z, x[0], x[1]);
    case FamilyTag::BigHermite1:
      return first ? big_hermite_first(n, q, z, x[0]) : big_hermite_second(n, q, z, x[0]);
    case FamilyTag::Hermite0: return hermite(n, q, z);
  }
  throw DomainError("eval_poly: unknown family");
}

bool finite(xc v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

std::size_t arity(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::AskeyWilson4: return 4;
    case FamilyTag::DualHahn3: return 3;
    case FamilyTag::AlSalamChihara2: return 2;
    case FamilyTag::BigHermite1: return 1;
    case FamilyTag::Hermite0: return 0;
  }
  return 0;
}

std::string_view family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::AskeyWilson4: return "aw";
    case FamilyTag::DualHahn3: return "dh";
    case FamilyTag::AlSalamChihara2: return "asc";
    case FamilyTag::BigHermite1: return "bigh";
    case FamilyTag::Hermite0: return "hermite";
  }
  return "?";
}

FamilyTag parse_family(std::string_view name) {
  if (name == "aw" || name == "AskeyWilson4" || name == "askey-wilson") return FamilyTag::AskeyWilson4;
  if (name == "dh" || name == "DualHahn3" || name == "dual-hahn") return FamilyTag::DualHahn3;
  if (name == "asc" || name == "AlSalamChihara2" || name == "al-salam-chihara") {
    return FamilyTag::AlSalamChihara2;
  }
  if (name == "bigh" || name == "BigHermite1" || name == "big-hermite") return FamilyTag::BigHermite1;
  if (name == "hermite" || name == "Hermite0") return FamilyTag::Hermite0;
  throw DomainError("unknown family: " + std::string(name));
}

Family::Family(FamilyTag tag, ParamMultiset params) : tag_(tag), params_(std::move(params)) {
  if (params_.size() != qaskey::arity(tag_)) {
    throw DomainError("family " + std::string(family_name(tag_)) + " takes " +
                      std::to_string(qaskey::arity(tag_)) + " parameters, got " +
                      std::to_string(params_.size()));
  }
}

Family Family::extended(cplx extra) const {
  std::vector<cplx> p(params_.begin(), params_.end());
  p.push_back(extra);
  switch (tag_) {
    case FamilyTag::Hermite0: return {FamilyTag::BigHermite1, ParamMultiset(std::move(p))};
    case FamilyTag::BigHermite1: return {FamilyTag::AlSalamChihara2, ParamMultiset(std::move(p))};
    case FamilyTag::AlSalamChihara2: return {FamilyTag::DualHahn3, ParamMultiset(std::move(p))};
    case FamilyTag::DualHahn3: return {FamilyTag::AskeyWilson4, ParamMultiset(std::move(p))};
    case FamilyTag::AskeyWilson4: break;
  }
  throw DomainError("Askey-Wilson is the top of the limit chain");
}

ZPoint::ZPoint(cplx z) : z_(z) {
  if (z == cplx{0.0, 0.0} || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("ZPoint: z must be finite and nonzero");
  }
}

ZPoint ZPoint::from_x(cplx x) { return ZPoint(x + std::sqrt(x * x + 1.0)); }

int representation_count(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::AskeyWilson4:
    case FamilyTag::DualHahn3:
    case FamilyTag::BigHermite1: return 2;
    default: return 1;
  }
}

LogComplex eval_poly_log(const Family& fam, int n, const ZPoint& pt, const QContext& ctx,
                         Rep rep, Orientation orient) {
  const Plan plan = make_plan(fam, n, pt, ctx, rep, orient);
  const xc v = run_ext(plan, n, xc(ctx.q()));
  if (finite(v)) {
    if (v == xc{}) return LogComplex::zero();
    return LogComplex(static_cast<double>(std::log(std::abs(v))),
                      static_cast<double>(std::arg(v)));
  }
  return run_log(plan, n, ctx);
}

cplx eval_poly(const Family& fam, int n, const ZPoint& pt, const QContext& ctx, Rep rep,
               Orientation orient) {
  const Plan plan = make_plan(fam, n, pt, ctx, rep, orient);
  const xc v = run_ext(plan, n, xc(ctx.q()));
  const cplx d = narrow(v);
  if (finite(v) && std::isfinite(d.real()) && std::isfinite(d.imag())) return d;
  return run_log(plan, n, ctx).value();
}

cplx eval_via_limit_chain(const Family& fam, int n, const ZPoint& pt, const QContext& ctx,
                          double h) {
  if (!(h > 0.0 && h <= 1e-3)) throw DomainError("eval_via_limit_chain: need 0 < h <= 1e-3");
  return eval_poly(fam.extended(h), n, pt, ctx);
}

cplx ismail_asc(int n, const ZPoint& pt, cplx a, cplx b, const QContext& ctx) {
  const cplx z = pt.z();
  const LogComplex pref = lc(a).pow(static_cast<long>(n)) * checked_poch({z / a}, ctx, n) /
                          checked_poch({ctx.q()}, ctx, n);
  return (pref * phi({ctx.pow(-n), -1.0 / (b * z)}, {ctx.pow(1 - n) * a / z}, ctx.q() * b / z,
                     ctx))
      .value();
}

cplx crossmap_ismail_asc(int n, const ZPoint& pt, cplx a, cplx b, const QContext& ctx) {
  const LogComplex scale = ctx.log_pow(-static_cast<double>(binom2(n))) *
                           lc(-1.0).pow(static_cast<long>(n)) * checked_poch({ctx.q()}, ctx, n);
  return scale.value() * ismail_asc(n, pt, a, b, ctx);
}

cplx crossmap_izz(int n, const ZPoint& pt, const ParamMultiset& params, const QContext& ctx,
                  IzzForm which) {
  const cplx z = pt.z();
  const cplx q = ctx.q();
  const cplx q2 = q * q;
  if (which == IzzForm::V3) {
    if (params.size() != 3) throw DomainError("crossmap_izz: V3 takes three parameters");
    const cplx a = params[0], b = params[1], c = params[2];
    const cplx A = q * a, B = q * b, C = q * c;
    // V_n(x; A, B, C | q)
    const LogComplex v = lc(A / q).pow(static_cast<long>(n)) *
                         checked_poch({-q2 / (A * C)}, ctx, n) /
                         checked_poch({-q2 / (B * C)}, ctx, n) *
                         phi({ctx.pow(-n), q * z / A, -q / (A * z)}, {-q2 / (A * B), -q2 / (A * C)},
                             -ctx.pow(n + 2) / (B * C), ctx);
    const LogComplex scale = ctx.log_pow(-2.0 * static_cast<double>(binom2(n))) *
                             lc(-b * c).pow(static_cast<long>(n)) *
                             checked_poch({-1.0 / (a * b), -1.0 / (b * c)}, ctx, n);
    return (scale * v).value();
  }
  if (params.size() != 4) throw DomainError("crossmap_izz: P4 takes four parameters");
  const cplx a = params[0], b = params[1], c = params[2], d = params[3];
  const cplx A = q * a, B = q * b, C = q * c, D = q * d;
  const LogComplex p = lc(A / q).pow(static_cast<long>(n)) *
                       checked_poch({-q2 / (A * B), -q2 / (A * C), -q2 / (A * D)}, ctx, n) *
                       phi({ctx.pow(-n), ctx.pow(n + 3) / (A * B * C * D), q * z / A, -q / (A * z)},
                           {-q2 / (A * B), -q2 / (A * C), -q2 / (A * D)}, q, ctx);
  const LogComplex scale = ctx.log_pow(-3.0 * static_cast<double>(binom2(n))) *
                           lc(-a * b * c * d).pow(static_cast<long>(n));
  return (scale * p).value();
}

cplx askey_wilson_classical(int n, cplx w, const ParamMultiset& params, const QContext& ctx) {
  if (params.size() != 4) throw DomainError("askey_wilson_classical: four parameters required");
  const cplx a = params[0], b = params[1], c = params[2], d = params[3];
  const LogComplex pref = lc(a).pow(-static_cast<long>(n)) * checked_poch({a * b, a * c, a * d}, ctx, n);
  return (pref * phi({ctx.pow(-n), a * b * c * d * ctx.pow(n - 1), a * w, a / w},
                     {a * b, a * c, a * d}, ctx.q(), ctx))
      .value();
}

std::pair<cplx, cplx> reciprocal_param_identity(int n, const ZPoint& pt,
                                                const ParamMultiset& params,
                                                const QContext& ctx) {
  if (params.size() != 4) throw DomainError("reciprocal_param_identity: four parameters required");
  const Family fam(FamilyTag::AskeyWilson4, params);
  const cplx lhs = eval_poly(fam, n, pt, ctx);
  const ParamMultiset rec = params.map([](cplx a) { return -kI / a; });
  const LogComplex scale = ctx.log_pow(-3.0 * static_cast<double>(binom2(n))) *
                           lc(kI * params.product()).pow(static_cast<long>(n));
  const cplx rhs = scale.value() * askey_wilson_classical(n, kI * pt.z(), rec, ctx);
  return {lhs, rhs};
}

}  // namespace qaskey
