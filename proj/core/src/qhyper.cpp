#include "qaskey/qhyper.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qaskey/error.hpp"
#include "qaskey/gamma.hpp"

namespace qaskey {

namespace {

// Neumaier summation; plain accumulation when disabled.
template <class T>
class Accumulator {
 public:
  explicit Accumulator(bool compensated) : compensated_(compensated) {}
  void add(T x) {
    if (!compensated_) {
      sum_ += x;
      return;
    }
    add_component(sum_, comp_, x);
  }
  T value() const { return sum_ + comp_; }

 private:
  static void add_scalar(double& s, double& c, double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x)) {
      c += (s - t) + x;
    } else {
      c += (x - t) + s;
    }
    s = t;
  }
  static void add_component(double& s, double& c, double x) { add_scalar(s, c, x); }
  static void add_component(cplx& s, cplx& c, cplx x) {
    double sr = s.real(), si = s.imag(), cr = c.real(), ci = c.imag();
    add_scalar(sr, cr, x.real());
    add_scalar(si, ci, x.imag());
    s = {sr, si};
    c = {cr, ci};
  }

  bool compensated_;
  T sum_{};
  T comp_{};
};

// Returns n >= 0 with a == q^{-n} to 1e-12 relative, if any.
std::optional<long> match_negative_power(cplx a, const QContext& ctx, long limit) {
  if (a == cplx{0.0, 0.0}) return std::nullopt;
  const double lq = std::log(std::abs(ctx.q()));
  const long n = std::lround(-std::log(std::abs(a)) / lq);
  if (n < 0 || n > limit) return std::nullopt;
  const cplx target = ctx.pow(-n);
  if (std::abs(a - target) <= 1e-12 * std::abs(target)) return n;
  return std::nullopt;
}

// Ratio term(k) / term(k-1) of the phi series, as separate factors.
LogComplex phi_step(const PhiSpec& spec, cplx qkm1, cplx qk) {
  LogComplex f;
  for (const cplx& a : spec.numerator()) f *= LogComplex::from(1.0 - a * qkm1);
  LogComplex den = LogComplex::from(1.0 - qk);
  for (const cplx& b : spec.denominator()) den *= LogComplex::from(1.0 - b * qkm1);
  if (den.is_zero()) throw PoleError("phi_rs: denominator vanishes");
  f /= den;
  const long e = 1 + spec.s() - spec.r();
  if (e != 0) f *= LogComplex::from(-qkm1).pow(e);
  f *= LogComplex::from(spec.z());
  return f;
}

}  // namespace

PhiSpec::PhiSpec(std::vector<cplx> numerator, std::vector<cplx> denominator, cplx z,
                 const QContext& ctx)
    : num_(std::move(numerator)), den_(std::move(denominator)), z_(z) {
  for (const cplx& a : num_) {
    if (auto n = match_negative_power(a, ctx, ctx.max_terms())) {
      const int ni = static_cast<int>(*n);
      if (!terminate_at_ || ni < *terminate_at_) terminate_at_ = ni;
    }
  }
  // (b; q)_k vanishes for k > j when b = q^{-j}; only indices the sum reaches matter.
  const long reach = terminate_at_ ? *terminate_at_ : ctx.max_terms();
  for (const cplx& b : den_) {
    if (auto j = match_negative_power(b, ctx, reach); j && *j < reach) {
      throw PoleError("PhiSpec: denominator parameter equals q^-" + std::to_string(*j), *j);
    }
  }
}

LogComplex phi_terminating_log(const PhiSpec& spec, const QContext& ctx) {
  if (!spec.terminating()) throw DomainError("phi_terminating_log: series does not terminate");
  const int n = *spec.terminate_at();
  std::vector<LogComplex> terms;
  terms.reserve(static_cast<std::size_t>(n) + 1);
  terms.emplace_back();
  LogComplex t;
  cplx qkm1{1.0, 0.0};
  for (int k = 1; k <= n; ++k) {
    const cplx qk = qkm1 * ctx.q();
    t *= phi_step(spec, qkm1, qk);
    terms.push_back(t);
    qkm1 = qk;
  }
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& x : terms) top = std::max(top, x.log_mag());
  Accumulator<cplx> acc(ctx.compensated());
  for (const auto& x : terms) {
    if (!x.is_zero()) acc.add(std::polar(std::exp(x.log_mag() - top), x.phase()));
  }
  return LogComplex(top, 0.0) * LogComplex::from(acc.value());
}

SeriesResult<cplx> phi_rs(const PhiSpec& spec, const QContext& ctx) {
  if (spec.z() == cplx{0.0, 0.0}) return {cplx{1.0, 0.0}, 1, 0.0, true};
  if (spec.terminating()) {
    return {phi_terminating_log(spec, ctx).value(), *spec.terminate_at() + 1, 0.0, true};
  }
  if (spec.r() > spec.s() + 1) {
    throw DivergenceError("phi_rs: r > s + 1 and the series does not terminate");
  }
  if (spec.r() == spec.s() + 1 && std::abs(spec.z()) >= 1.0) {
    throw DivergenceError("phi_rs: r = s + 1 requires |z| < 1");
  }
  SeriesResult<cplx> r;
  Accumulator<cplx> acc(ctx.compensated());
  cplx term{1.0, 0.0};
  acc.add(term);
  cplx qkm1{1.0, 0.0};
  int small = 0;
  int k = 1;
  double ratio = 1.0;
  for (; k <= ctx.max_terms(); ++k) {
    const cplx qk = qkm1 * ctx.q();
    const cplx step = phi_step(spec, qkm1, qk).value();
    term *= step;
    acc.add(term);
    qkm1 = qk;
    ratio = std::abs(step);
    if (std::abs(term) <= ctx.eps_term() * std::abs(acc.value()) && ratio < 1.0) {
      if (++small >= 2) break;
    } else {
      small = 0;
    }
  }
  r.value = acc.value();
  r.n_used = std::min(k, ctx.max_terms()) + 1;
  r.converged = k <= ctx.max_terms();
  r.tail_bound = ratio < 1.0 ? std::abs(term) * ratio / (1.0 - ratio)
                             : std::numeric_limits<double>::infinity();
  return r;
}

BilateralResult bilateral_sum(const BilateralTermGen& gen, const QContext& ctx) {
  struct Tail {
    long sign;
    cplx prev;
    cplx ratio{0.0, 0.0};
    cplx last{0.0, 0.0};
    int below = 0;
    bool done = false;
    long reached = 0;
  };
  constexpr int kConsecutive = 5;

  BilateralResult r;
  Accumulator<cplx> acc(ctx.compensated());
  const cplx t0 = gen.term(0);
  acc.add(t0);
  double running_max = std::abs(t0);
  Tail tails[2] = {{+1, t0}, {-1, t0}};
  int n_used = 1;
  bool capped = false;

  for (long m = 1; !(tails[0].done && tails[1].done); ++m) {
    if (m > ctx.max_terms()) {
      capped = true;
      break;
    }
    for (Tail& tail : tails) {
      if (tail.done) continue;
      const long k = tail.sign * m;
      const cplx t = gen.term(k);
      ++n_used;
      acc.add(t);
      running_max = std::max(running_max, std::abs(t));
      if (tail.prev != cplx{0.0, 0.0} && t != cplx{0.0, 0.0}) tail.ratio = t / tail.prev;
      tail.prev = t;
      tail.last = t;
      tail.reached = k;
      if (std::abs(t) <= ctx.eps_term() * running_max) {
        if (++tail.below >= kConsecutive) tail.done = true;
      } else {
        tail.below = 0;
      }
    }
  }

  r.value = acc.value();
  r.n_used = n_used;
  r.converged = !capped;
  r.ratio_pos = tails[0].ratio;
  r.ratio_neg = tails[1].ratio;
  r.k_pos = tails[0].reached;
  r.k_neg = tails[1].reached;
  double tail_bound = 0.0;
  for (const Tail& tail : tails) {
    const double rho = std::abs(tail.ratio);
    tail_bound += rho < 1.0 ? std::abs(tail.last) * rho / (1.0 - rho)
                            : std::numeric_limits<double>::infinity();
  }
  r.tail_bound = tail_bound;
  if (gen.decay_hint && std::abs(*gen.decay_hint) > 0.0) {
    r.hint_mismatch = std::abs(r.ratio_pos) / std::abs(*gen.decay_hint) - 1.0;
  }
  return r;
}

SeriesResult<double> bilateral_sum_algebraic(const std::function<double(long)>& term,
                                             double rel_tol, long max_pairs) {
  SeriesResult<double> r;
  Accumulator<double> acc(true);
  long n = 0;
  long cutoff = 256;
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (;;) {
    for (; n < cutoff; ++n) acc.add(term(n) + term(-n - 1));
    const double current = acc.value();
    if (!std::isnan(previous)) {
      const double change = std::abs(current - previous);
      if (change <= rel_tol * std::abs(current)) {
        r.value = current;
        r.tail_bound = change;
        break;
      }
      if (cutoff >= max_pairs) {
        r.value = current;
        r.tail_bound = change;
        r.converged = false;
        break;
      }
    }
    previous = current;
    cutoff *= 2;
  }
  r.n_used = static_cast<int>(std::min<long>(2 * n, std::numeric_limits<int>::max()));
  return r;
}

DougallResult dougall_5h5(const std::array<double, 4>& a) {
  const double sum = a[0] + a[1] + a[2] + a[3];
  if (!(sum > -1.0)) throw DivergenceError("dougall_5h5: requires a1 + a2 + a3 + a4 > -1");
  auto f = [&](double x) {
    double p = 1.0;
    for (double aj : a) p *= recip_gamma_pair(aj, x);
    return p;
  };
  DougallResult out;
  const auto s = bilateral_sum_algebraic(
      [&](long n) { return (4.0 * static_cast<double>(n) + 1.0) * f(static_cast<double>(n) + 0.25); },
      1e-14);
  out.direct = s;
  out.direct.value = -s.value / (4.0 * std::numbers::pi);
  out.direct.tail_bound = s.tail_bound / (4.0 * std::numbers::pi);
  double den = 1.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) den *= gamma_recip(1.0 + a[i] + a[j]);
  }
  out.closed = -std::tgamma(sum + 1.0) * den / (2.0 * std::numbers::pi * std::numbers::pi);
  return out;
}

}  // namespace qaskey
