#include "qaskey/ortho_discrete.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "qaskey/error.hpp"

namespace qaskey {

namespace {

LogComplex lc(cplx z) { return LogComplex::from(z); }

bool vanishes(cplx f, cplx t) { return std::abs(f) <= 1e-14 * std::max(1.0, std::abs(t)); }

// q alpha^{4-L} (-1)^L prod(a): the geometric part of the lattice weight.
cplx weight_base(const Family& fam, cplx alpha, const QContext& ctx) {
  const auto L = static_cast<long>(fam.arity());
  cplx b = ctx.q() * fam.params().product() * std::pow(alpha, static_cast<int>(4 - L));
  return (L % 2 == 1) ? -b : b;
}

LogComplex infinite_or_throw(std::span<const cplx> as, const QContext& ctx, const char* what) {
  const auto r = qpoch_product_infinite(as, ctx);
  if (!r.converged) throw ConvergenceError(std::string(what) + ": infinite product did not converge");
  return r.value;
}

// Weights and polynomial values on the lattice, grown outward from k = 0 by
// the ratio W_{k+1} / W_k.
class LatticeTable {
 public:
  LatticeTable(const Family& fam, cplx alpha, int degrees, const QContext& ctx)
      : fam_(fam), alpha_(alpha), degrees_(degrees), ctx_(ctx),
        base_(weight_base(fam, alpha, ctx)) {
    pos_.push_back(make_node(0, LogComplex()));
  }

  // (1 + q^{2k} alpha^2) P_m P_n W_k
  cplx term(long k, int m, int n) {
    const Node& node = at(k);
    if (node.weight.is_zero()) return {0.0, 0.0};
    return (node.weight * node.poly[static_cast<std::size_t>(m)] *
            node.poly[static_cast<std::size_t>(n)])
        .value();
  }

 private:
  struct Node {
    LogComplex weight;  // includes the factor 1 + q^{2k} alpha^2
    LogComplex raw;     // W_k alone
    std::vector<LogComplex> poly;
  };

  Node make_node(long k, LogComplex raw) {
    Node node;
    node.raw = raw;
    const cplx z = ctx_.pow(k) * alpha_;
    node.weight = raw * lc(1.0 + z * z);
    if (!raw.is_zero()) {
      const ZPoint pt(z);
      for (int j = 0; j <= degrees_; ++j) node.poly.push_back(eval_poly_log(fam_, j, pt, ctx_));
    }
    return node;
  }

  // W_{k+1} / W_k split into numerator and denominator factors.
  std::pair<cplx, cplx> ratio(long k) const {
    cplx num = base_ * ctx_.pow(static_cast<long>(4 - fam_.arity()) * k);
    cplx den{1.0, 0.0};
    const cplx qk = ctx_.pow(k);
    bool num_zero = false;
    bool den_zero = false;
    for (const cplx& a : fam_.params()) {
      const cplx tn = alpha_ / a * qk;
      const cplx td = -ctx_.q() * alpha_ * a * qk;
      if (vanishes(1.0 - tn, tn)) num_zero = true;
      if (vanishes(1.0 - td, td)) den_zero = true;
      num *= 1.0 - tn;
      den *= 1.0 - td;
    }
    if (num_zero) num = 0.0;
    if (den_zero) den = 0.0;
    return {num, den};
  }

  const Node& at(long k) {
    if (k >= 0) {
      while (static_cast<long>(pos_.size()) <= k) {
        const long j = static_cast<long>(pos_.size()) - 1;
        const LogComplex prev = pos_.back().raw;
        LogComplex next = LogComplex::zero();
        if (!prev.is_zero()) {
          const auto [num, den] = ratio(j);
          if (den == cplx{0.0, 0.0}) {
            throw PoleError("lattice weight has a pole at k = " + std::to_string(j + 1), j + 1);
          }
          if (num != cplx{0.0, 0.0}) next = prev * lc(num) / lc(den);
        }
        pos_.push_back(make_node(j + 1, next));
      }
      return pos_[static_cast<std::size_t>(k)];
    }
    while (static_cast<long>(neg_.size()) < -k) {
      const long j = -static_cast<long>(neg_.size()) - 1;  // index being added
      const LogComplex prev = neg_.empty() ? pos_.front().raw : neg_.back().raw;
      LogComplex next = LogComplex::zero();
      if (!prev.is_zero()) {
        const auto [num, den] = ratio(j);
        if (num == cplx{0.0, 0.0}) {
          throw PoleError("lattice weight has a pole at k = " + std::to_string(j), j);
        }
        if (den != cplx{0.0, 0.0}) next = prev * lc(den) / lc(num);
      }
      neg_.push_back(make_node(j, next));
    }
    return neg_[static_cast<std::size_t>(-k - 1)];
  }

  const Family& fam_;
  cplx alpha_;
  int degrees_;
  const QContext& ctx_;
  cplx base_;
  std::deque<Node> pos_;
  std::deque<Node> neg_;
};

BilateralResult inner_on(LatticeTable& table, const DiscreteOrthoSpec& spec, int m, int n) {
  if (m < 0 || n < 0 || m > spec.max_degree() || n > spec.max_degree()) {
    throw DomainError("discrete_inner: degree outside 0.." + std::to_string(spec.max_degree()));
  }
  BilateralTermGen gen;
  const int lo = std::min(m, n);
  const int hi = std::max(m, n);
  gen.term = [&table, lo, hi](long k) { return table.term(k, lo, hi); };
  if (spec.family().tag() == FamilyTag::AskeyWilson4) {
    gen.decay_hint = spec.ctx().pow(1 - 2L * hi) * spec.family().params().product();
  }
  return bilateral_sum(gen, spec.ctx());
}

}  // namespace

DiscreteOrthoSpec::DiscreteOrthoSpec(Family fam, cplx alpha, int max_degree, QContext ctx)
    : fam_(std::move(fam)), alpha_(alpha), max_degree_(max_degree), ctx_(std::move(ctx)) {
  if (alpha_ == cplx{0.0, 0.0}) throw DomainError("DiscreteOrthoSpec: alpha must be nonzero");
  if (max_degree_ < 0) throw DomainError("DiscreteOrthoSpec: max_degree must be nonnegative");
  if (max_degree_ > ctx_.degree_cap()) {
    throw DomainError("DiscreteOrthoSpec: max_degree exceeds the degree cap " +
                      std::to_string(ctx_.degree_cap()));
  }
  const int admissible = admissible_degree(fam_, ctx_);
  if (max_degree_ > admissible) {
    throw DomainError("DiscreteOrthoSpec: |q abcd| < |q|^{2N} requires N <= " +
                      std::to_string(admissible) + ", got N = " + std::to_string(max_degree_));
  }
}

int DiscreteOrthoSpec::admissible_degree(const Family& fam, const QContext& ctx) {
  if (fam.tag() != FamilyTag::AskeyWilson4) return ctx.degree_cap();
  const double lhs = std::log(std::abs(ctx.q() * fam.params().product()));
  const double lq = std::log(std::abs(ctx.q()));
  if (lhs >= 0.0) return -1;
  // largest N with lhs < 2 N lq
  const double bound = lhs / (2.0 * lq);
  int n = static_cast<int>(std::ceil(bound)) - 1;
  while (n + 1 < bound) ++n;
  return std::min(n, ctx.degree_cap());
}

LogComplex discrete_weight_log(const Family& fam, cplx alpha, long k, const QContext& ctx) {
  LogComplex num;
  LogComplex den;
  bool num_zero = false;
  bool den_zero = false;
  for (const cplx& a : fam.params()) {
    const cplx bn = alpha / a;
    const cplx bd = -ctx.q() * alpha * a;
    if (k >= 0) {
      for (long j = 0; j < k; ++j) {
        const cplx tn = bn * ctx.pow(j);
        const cplx td = bd * ctx.pow(j);
        if (vanishes(1.0 - tn, tn)) num_zero = true; else num *= lc(1.0 - tn);
        if (vanishes(1.0 - td, td)) den_zero = true; else den *= lc(1.0 - td);
      }
    } else {
      // (b; q)_k = 1 / prod_{i=1}^{-k} (1 - b q^{-i})
      for (long i = 1; i <= -k; ++i) {
        const cplx tn = bn * ctx.pow(-i);
        const cplx td = bd * ctx.pow(-i);
        if (vanishes(1.0 - tn, tn)) den_zero = true; else den *= lc(1.0 - tn);
        if (vanishes(1.0 - td, td)) num_zero = true; else num *= lc(1.0 - td);
      }
    }
  }
  if (den_zero) throw PoleError("lattice weight has a pole at k = " + std::to_string(k), k);
  if (num_zero) return LogComplex::zero();
  const double e = static_cast<double>(4 - static_cast<long>(fam.arity())) *
                   static_cast<double>(binom2(k));
  return num / den * ctx.log_pow(e) * lc(weight_base(fam, alpha, ctx)).pow(k);
}

LogComplex norm_finite_factor(const Family& fam, int n, const QContext& ctx) {
  if (n < 0) throw DomainError("norm: degree must be nonnegative");
  const double c = static_cast<double>(binom2(n));
  const auto& p = fam.params();
  const cplx q = ctx.q();
  const cplx qq[] = {q};
  const LogComplex qn = qpoch_product_finite(qq, ctx, n);
  const auto N = static_cast<long>(n);
  switch (fam.tag()) {
    case FamilyTag::AskeyWilson4: {
      const cplx abcd = p.product();
      std::vector<cplx> pairs;
      for (const cplx& ab : p.pair_products()) pairs.push_back(-1.0 / ab);
      const cplx t1[] = {1.0 / (q * abcd)};
      const cplx t2[] = {1.0 / abcd};
      const LogComplex r2 = qpoch_product_finite(t2, ctx, 2 * n);
      if (r2.is_zero()) throw PoleError("norm: (1/abcd; q)_{2n} vanishes", n);
      const LogComplex r1n = qpoch_product_finite(t1, ctx, n);
      if (r1n.is_zero()) throw PoleError("norm: (1/(q abcd); q)_n vanishes", n);
      return ctx.log_pow(-6.0 * c) * lc(-abcd * abcd).pow(N) * qn *
             qpoch_product_finite(pairs, ctx, n) * qpoch_product_finite(t1, ctx, 2 * n) / r1n / r2;
    }
    case FamilyTag::DualHahn3: {
      const cplx abc = p.product();
      const cplx t[] = {-1.0 / (p[0] * p[1]), -1.0 / (p[0] * p[2]), -1.0 / (p[1] * p[2])};
      return ctx.log_pow(-4.0 * c) * lc(abc * abc / q).pow(N) * qn *
             qpoch_product_finite(t, ctx, n);
    }
    case FamilyTag::AlSalamChihara2: {
      const cplx ab = p.product();
      const cplx t[] = {-1.0 / ab};
      return ctx.log_pow(-2.0 * c) * lc(ab / q).pow(N) * qn * qpoch_product_finite(t, ctx, n);
    }
    case FamilyTag::BigHermite1:
    case FamilyTag::Hermite0: return ctx.log_pow(-c) * qn * lc(q).pow(-N);
  }
  throw DomainError("norm: unknown family");
}

LogComplex norm_pair_factor(const Family& fam, const QContext& ctx) {
  std::vector<cplx> pairs;
  for (const cplx& ab : fam.params().pair_products()) pairs.push_back(-ctx.q() * ab);
  LogComplex r = infinite_or_throw(pairs, ctx, "norm");
  if (fam.tag() == FamilyTag::AskeyWilson4) {
    const cplx t[] = {ctx.q() * fam.params().product()};
    const LogComplex d = infinite_or_throw(t, ctx, "norm");
    if (d.is_zero()) throw PoleError("norm: (q abcd; q)_inf vanishes", 0);
    r /= d;
  }
  return r;
}

cplx closed_norm(const DiscreteOrthoSpec& spec, int n) {
  if (n < 0 || n > spec.max_degree()) {
    throw DomainError("closed_norm: degree outside 0.." + std::to_string(spec.max_degree()));
  }
  const QContext& ctx = spec.ctx();
  const cplx q = ctx.q();
  const cplx a2 = spec.alpha() * spec.alpha();
  const cplx top[] = {q, -a2, -q / a2};
  std::vector<cplx> bottom;
  for (const cplx& a : spec.family().params()) {
    bottom.push_back(-q * spec.alpha() * a);
    bottom.push_back(q * a / spec.alpha());
  }
  const LogComplex den = infinite_or_throw(bottom, ctx, "closed_norm");
  if (den.is_zero()) throw PoleError("closed_norm: a denominator product vanishes", n);
  const LogComplex h = infinite_or_throw(top, ctx, "closed_norm") / den *
                       norm_pair_factor(spec.family(), ctx) *
                       norm_finite_factor(spec.family(), n, ctx);
  return h.value();
}

BilateralResult discrete_inner(const DiscreteOrthoSpec& spec, int m, int n) {
  LatticeTable table(spec.family(), spec.alpha(), std::max(m, n), spec.ctx());
  return inner_on(table, spec, m, n);
}

GramReport make_gram_report(std::vector<std::vector<cplx>> computed, std::vector<cplx> closed,
                            std::vector<std::string> failures) {
  GramReport rep;
  const std::size_t size = closed.size();
  rep.defect.assign(size, std::vector<double>(size, 0.0));
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < size; ++m) {
    for (std::size_t n = 0; n < size; ++n) {
      const cplx g = computed[m][n];
      double d;
      if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) {
        d = inf;
      } else if (m == n) {
        d = std::abs(g - closed[n]) / std::abs(closed[n]);
      } else {
        d = std::abs(g) / std::sqrt(std::abs(closed[m]) * std::abs(closed[n]));
      }
      if (std::isnan(d)) d = inf;
      rep.defect[m][n] = d;
      if (m == n) {
        rep.worst_diag = std::max(rep.worst_diag, d);
      } else {
        rep.worst_offdiag = std::max(rep.worst_offdiag, d);
      }
    }
  }
  rep.computed = std::move(computed);
  rep.closed_form_diag = std::move(closed);
  rep.failures = std::move(failures);
  return rep;
}

GramReport gram(const DiscreteOrthoSpec& spec) {
  const int size = spec.max_degree() + 1;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::vector<cplx>> computed(static_cast<std::size_t>(size),
                                          std::vector<cplx>(static_cast<std::size_t>(size)));
  std::vector<cplx> closed(static_cast<std::size_t>(size));
  std::vector<std::string> failures;
  LatticeTable table(spec.family(), spec.alpha(), spec.max_degree(), spec.ctx());
  for (int n = 0; n < size; ++n) {
    try {
      closed[static_cast<std::size_t>(n)] = closed_norm(spec, n);
    } catch (const Error& e) {
      closed[static_cast<std::size_t>(n)] = {nan, nan};
      failures.push_back("closed_norm(" + std::to_string(n) + "): " + e.what());
    }
  }
  for (int m = 0; m < size; ++m) {
    for (int n = 0; n < size; ++n) {
      cplx& slot = computed[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
      try {
        const auto r = inner_on(table, spec, m, n);
        slot = r.value;
        if (!r.converged) {
          failures.push_back("entry (" + std::to_string(m) + "," + std::to_string(n) +
                             "): bilateral sum did not converge");
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

std::pair<cplx, cplx> total_mass(const ParamMultiset& params4, cplx alpha, const QContext& ctx) {
  if (params4.size() != 4) throw DomainError("total_mass: four parameters required");
  const DiscreteOrthoSpec spec(Family(FamilyTag::AskeyWilson4, params4), alpha, 0, ctx);
  const auto r = discrete_inner(spec, 0, 0);
  if (!r.converged) throw ConvergenceError("total_mass: bilateral sum did not converge");
  return {r.value, closed_norm(spec, 0)};
}

}  // namespace qaskey
