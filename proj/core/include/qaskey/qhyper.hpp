#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "qaskey/context.hpp"
#include "qaskey/log_complex.hpp"
#include "qaskey/series.hpp"

namespace qaskey {

/// Parameters of r_phi_s(a_1..a_r; b_1..b_s; q, z).
///
/// Denominator entries may be 0 (as in 1phi1(q^{-n}; 0; q, z)). The
/// constructor detects termination (a numerator equal to q^{-n} within 1e-12
/// relative) and rejects denominators on which (b; q)_k vanishes for an index
/// that the summation will reach.
class PhiSpec {
 public:
  PhiSpec(std::vector<cplx> numerator, std::vector<cplx> denominator, cplx z,
          const QContext& ctx);

  const std::vector<cplx>& numerator() const noexcept { return num_; }
  const std::vector<cplx>& denominator() const noexcept { return den_; }
  cplx z() const noexcept { return z_; }
  int r() const noexcept { return static_cast<int>(num_.size()); }
  int s() const noexcept { return static_cast<int>(den_.size()); }
  bool terminating() const noexcept { return terminate_at_.has_value(); }
  /// Smallest n with a numerator entry equal to q^{-n}.
  std::optional<int> terminate_at() const noexcept { return terminate_at_; }

 private:
  std::vector<cplx> num_;
  std::vector<cplx> den_;
  cplx z_;
  std::optional<int> terminate_at_;
};

/// Sums the basic hypergeometric series. Terminating series are summed
/// exactly over k = 0..n. Throws DivergenceError for r > s + 1 without
/// termination and for r = s + 1 with |z| >= 1.
SeriesResult<cplx> phi_rs(const PhiSpec& spec, const QContext& ctx);

/// Terminating series in log form; terms are formed in LogComplex and summed
/// relative to the largest one, so arguments of any magnitude are safe.
/// Throws DomainError if the series does not terminate.
LogComplex phi_terminating_log(const PhiSpec& spec, const QContext& ctx);

/// A two-sided term generator k -> term(k), k in Z.
struct BilateralTermGen {
  std::function<cplx(long)> term;
  /// Expected two-sided geometric ratio, when known.
  std::optional<cplx> decay_hint;
};

struct BilateralResult : SeriesResult<cplx> {
  /// Last observed term(k+1)/term(k) on the k -> +inf side.
  cplx ratio_pos{0.0, 0.0};
  /// Last observed term(k-1)/term(k) on the k -> -inf side.
  cplx ratio_neg{0.0, 0.0};
  long k_pos = 0;  ///< largest index summed
  long k_neg = 0;  ///< smallest index summed
  /// |ratio_pos| / |decay_hint| - 1 when a hint was supplied.
  std::optional<double> hint_mismatch;
};

/// Sums term(k) outward (0, +1, -1, +2, -2, ...). Each tail stops after five
/// consecutive terms below eps_term times the running maximum magnitude; a
/// tail that exhausts max_terms leaves converged = false.
BilateralResult bilateral_sum(const BilateralTermGen& gen, const QContext& ctx);

/// Sums a bilateral series whose terms decay only algebraically by pairing
/// k with -k-1 and doubling the cutoff until successive partial sums agree
/// within rel_tol. tail_bound is the last change.
SeriesResult<double> bilateral_sum_algebraic(const std::function<double(long)>& term,
                                             double rel_tol, long max_pairs = 1L << 22);

struct DougallResult {
  SeriesResult<double> direct;  ///< -(1/4 pi) sum_n (4n+1) f(n + 1/4)
  double closed = 0.0;          ///< -(1/2 pi^2) Gamma(1+sum a) / prod Gamma(1+a_i+a_j)
};

/// The well-poised 5H5 bilateral sum behind the symmetric beta integral,
/// summed directly and through Dougall's closed form.
/// Throws DivergenceError unless a1+a2+a3+a4 > -1.
DougallResult dougall_5h5(const std::array<double, 4>& a);

}  // namespace qaskey
