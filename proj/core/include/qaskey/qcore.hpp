#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "qaskey/context.hpp"
#include "qaskey/log_complex.hpp"
#include "qaskey/series.hpp"

namespace qaskey {

/// Ordered multiset of nonzero complex parameters, the bold-a shorthand
/// {a, b, c, d}: (x a; q)_k means the product over every entry.
class ParamMultiset {
 public:
  static constexpr std::size_t kMaxSize = 4;

  ParamMultiset() = default;
  ParamMultiset(std::initializer_list<cplx> entries);
  explicit ParamMultiset(std::vector<cplx> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const cplx& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const cplx> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  /// Entry-wise image, e.g. ms.map([&](cplx a) { return alpha / a; }).
  ParamMultiset map(const std::function<cplx(cplx)>& f) const;
  /// Product of all entries (1 for the empty multiset).
  cplx product() const;
  /// Products a_i a_j over unordered pairs i < j, in lexicographic order.
  std::vector<cplx> pair_products() const;

 private:
  std::vector<cplx> entries_;
};

/// binom(n, 2) = n(n-1)/2, valid for negative n as well.
constexpr long binom2(long n) { return n * (n - 1) / 2; }

/// (a; q)_n for n >= 0, ascending product order.
cplx qpoch_finite(cplx a, const QContext& ctx, int n);

/// (a; q^{-1})_n through the reflection q^{-binom(n,2)} (-a)^n (1/a; q)_n.
cplx qpoch_finite_negbase(cplx a, const QContext& ctx, int n);

/// (a; q)_infinity in log form. Stops once the relative tail bound
/// sum |a q^j| / (1 - |a q^j|) drops below eps_term; never throws on
/// non-convergence. A factor with |1 - a q^j| below ~1e-14 is treated as an
/// exact zero.
SeriesResult<LogComplex> qpoch_infinite_log(cplx a, const QContext& ctx);
SeriesResult<cplx> qpoch_infinite(cplx a, const QContext& ctx);

/// prod_{a in ms} (a; q)_n.
cplx qpoch_multiset(const ParamMultiset& ms, const QContext& ctx, int n);
/// prod_{a in ms} (a; q)_infinity.
SeriesResult<LogComplex> qpoch_multiset_infinite(const ParamMultiset& ms, const QContext& ctx);

/// Product of (a; q)_infinity over an arbitrary list (e.g. the seven
/// factors of a norm), in log form.
SeriesResult<LogComplex> qpoch_product_infinite(std::span<const cplx> as, const QContext& ctx);
/// Product of (a; q)_n over an arbitrary list, in log form.
LogComplex qpoch_product_finite(std::span<const cplx> as, const QContext& ctx, int n);

/// (a; q)_k for every integer k, with (a; q)_{-m} = 1 / (a q^{-m}; q)_m.
/// Throws PoleError when a = q^j for some 1 <= j <= -k.
cplx qpoch_bilateral_index(cplx a, const QContext& ctx, long k);
LogComplex qpoch_bilateral_index_log(cplx a, const QContext& ctx, long k);

/// Modified theta function (z; q)_inf (q/z; q)_inf. Throws DomainError at z = 0.
SeriesResult<cplx> theta(cplx z, const QContext& ctx);

/// Gamma_q(x) = (q;q)_inf (1-q)^{1-x} / (q^x;q)_inf for real q in (0,1),
/// evaluated in log space. Throws PoleError at x = 0, -1, -2, ... and
/// ConvergenceError if max_terms is too small for the products.
double qgamma(double x, const QContext& ctx);

}  // namespace qaskey
