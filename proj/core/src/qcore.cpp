#include "qaskey/qcore.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qaskey/error.hpp"

namespace qaskey {

namespace {

// Products are accumulated as mantissa * exp(log_scale) so that long runs of
// large or small factors stay representable.
class ScaledProduct {
 public:
  void multiply(cplx f) {
    mantissa_ *= f;
    const double m = std::abs(mantissa_);
    if (m > 1e100 || (m < 1e-100 && m != 0.0)) {
      scale_ *= LogComplex::from(mantissa_);
      mantissa_ = 1.0;
    }
  }
  LogComplex result() const { return scale_ * LogComplex::from(mantissa_); }

 private:
  cplx mantissa_{1.0, 0.0};
  LogComplex scale_;
};

// 1 - t that is indistinguishable from zero at double precision.
bool vanishing_factor(cplx t) {
  return std::abs(1.0 - t) <= 1e-14 * std::max(1.0, std::abs(t));
}

}  // namespace

ParamMultiset::ParamMultiset(std::initializer_list<cplx> entries)
    : ParamMultiset(std::vector<cplx>(entries)) {}

ParamMultiset::ParamMultiset(std::vector<cplx> entries) : entries_(std::move(entries)) {
  if (entries_.size() > kMaxSize) {
    throw DomainError("ParamMultiset: at most 4 entries");
  }
  for (const cplx& e : entries_) {
    if (e == cplx{0.0, 0.0}) throw DomainError("ParamMultiset: entries must be nonzero");
  }
}

ParamMultiset ParamMultiset::map(const std::function<cplx(cplx)>& f) const {
  std::vector<cplx> out;
  out.reserve(entries_.size());
  for (const cplx& e : entries_) out.push_back(f(e));
  return ParamMultiset(std::move(out));
}

cplx ParamMultiset::product() const {
  cplx p{1.0, 0.0};
  for (const cplx& e : entries_) p *= e;
  return p;
}

std::vector<cplx> ParamMultiset::pair_products() const {
  std::vector<cplx> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = i + 1; j < entries_.size(); ++j) out.push_back(entries_[i] * entries_[j]);
  }
  return out;
}

cplx qpoch_finite(cplx a, const QContext& ctx, int n) {
  if (n < 0) throw DomainError("qpoch_finite: n must be nonnegative");
  cplx p{1.0, 0.0};
  cplx t = a;
  for (int j = 0; j < n; ++j) {
    p *= 1.0 - t;
    t *= ctx.q();
  }
  return p;
}

cplx qpoch_finite_negbase(cplx a, const QContext& ctx, int n) {
  if (a == cplx{0.0, 0.0}) throw DomainError("qpoch_finite_negbase: a must be nonzero");
  if (n < 0) throw DomainError("qpoch_finite_negbase: n must be nonnegative");
  return ctx.pow(-binom2(n)) * std::pow(-a, n) * qpoch_finite(1.0 / a, ctx, n);
}

SeriesResult<LogComplex> qpoch_infinite_log(cplx a, const QContext& ctx) {
  SeriesResult<LogComplex> r;
  const double abs_q = std::abs(ctx.q());
  ScaledProduct prod;
  cplx t = a;
  int j = 0;
  double rel = 0.0;
  for (;; ++j) {
    const double at = std::abs(t);
    if (at == 0.0) {
      rel = 0.0;
      break;
    }
    rel = at < 1.0 ? at / ((1.0 - abs_q) * (1.0 - at)) : std::numeric_limits<double>::infinity();
    if (rel <= ctx.eps_term()) break;
    if (j >= ctx.max_terms()) {
      r.converged = false;
      break;
    }
    if (vanishing_factor(t)) {
      r.value = LogComplex::zero();
      r.n_used = j + 1;
      r.tail_bound = 0.0;
      return r;
    }
    prod.multiply(1.0 - t);
    t *= ctx.q();
  }
  r.value = prod.result();
  r.n_used = j;
  r.tail_bound = std::isfinite(rel) ? std::exp(r.value.log_mag()) * rel
                                    : std::numeric_limits<double>::infinity();
  return r;
}

SeriesResult<cplx> qpoch_infinite(cplx a, const QContext& ctx) {
  const auto lr = qpoch_infinite_log(a, ctx);
  return {lr.value.value(), lr.n_used, lr.tail_bound, lr.converged};
}

cplx qpoch_multiset(const ParamMultiset& ms, const QContext& ctx, int n) {
  cplx p{1.0, 0.0};
  for (const cplx& e : ms) p *= qpoch_finite(e, ctx, n);
  return p;
}

SeriesResult<LogComplex> qpoch_product_infinite(std::span<const cplx> as, const QContext& ctx) {
  SeriesResult<LogComplex> r;
  double rel = 0.0;
  for (const cplx& a : as) {
    const auto f = qpoch_infinite_log(a, ctx);
    r.value *= f.value;
    r.n_used = std::max(r.n_used, f.n_used);
    r.converged = r.converged && f.converged;
    if (!f.value.is_zero()) rel += f.tail_bound / std::exp(f.value.log_mag());
  }
  r.tail_bound = r.value.is_zero() ? 0.0 : std::exp(r.value.log_mag()) * rel;
  return r;
}

SeriesResult<LogComplex> qpoch_multiset_infinite(const ParamMultiset& ms, const QContext& ctx) {
  return qpoch_product_infinite(ms.entries(), ctx);
}

LogComplex qpoch_product_finite(std::span<const cplx> as, const QContext& ctx, int n) {
  if (n < 0) throw DomainError("qpoch_product_finite: n must be nonnegative");
  ScaledProduct prod;
  for (const cplx& a : as) {
    cplx t = a;
    for (int j = 0; j < n; ++j) {
      prod.multiply(1.0 - t);
      t *= ctx.q();
    }
  }
  return prod.result();
}

LogComplex qpoch_bilateral_index_log(cplx a, const QContext& ctx, long k) {
  ScaledProduct prod;
  if (k >= 0) {
    cplx t = a;
    for (long j = 0; j < k; ++j) {
      prod.multiply(1.0 - t);
      t *= ctx.q();
    }
    return prod.result();
  }
  const cplx qinv = 1.0 / ctx.q();
  cplx t = a;
  for (long i = 1; i <= -k; ++i) {
    t *= qinv;
    if (vanishing_factor(t)) {
      throw PoleError("qpoch_bilateral_index: a = q^" + std::to_string(i) + " is a pole", k);
    }
    prod.multiply(1.0 - t);
  }
  return prod.result().inverse();
}

cplx qpoch_bilateral_index(cplx a, const QContext& ctx, long k) {
  if (k >= 0) return qpoch_finite(a, ctx, static_cast<int>(k));
  return qpoch_bilateral_index_log(a, ctx, k).value();
}

SeriesResult<cplx> theta(cplx z, const QContext& ctx) {
  if (z == cplx{0.0, 0.0}) throw DomainError("theta: z must be nonzero");
  const cplx args[] = {z, ctx.q() / z};
  const auto r = qpoch_product_infinite(args, ctx);
  return {r.value.value(), r.n_used, r.tail_bound, r.converged};
}

double qgamma(double x, const QContext& ctx) {
  const double q = ctx.real_q();
  if (x <= 0.0 && x == std::round(x)) {
    throw PoleError("qgamma: pole at x = " + std::to_string(x), static_cast<long>(x));
  }
  const auto num = qpoch_infinite_log(q, ctx);
  const auto den = qpoch_infinite_log(std::pow(q, x), ctx);
  if (!num.converged || !den.converged) {
    throw ConvergenceError("qgamma: infinite products did not converge; raise max_terms");
  }
  if (den.value.is_zero()) throw PoleError("qgamma: vanishing denominator", static_cast<long>(x));
  const LogComplex r = num.value / den.value * LogComplex::from_log((1.0 - x) * std::log1p(-q));
  return r.value().real();
}

}  // namespace qaskey
