#pragma once

#include <complex>
#include <optional>

#include "qaskey/log_complex.hpp"

namespace qaskey {

/// The base q together with the truncation and verification tolerances used
/// by every evaluation. Immutable once constructed.
class QContext {
 public:
  static constexpr double kDefaultEpsTerm = 1e-16;
  static constexpr double kDefaultEpsVerify = 1e-8;
  static constexpr int kDefaultMaxTerms = 10'000;
  static constexpr int kDefaultDegreeCap = 12;

  struct Options {
    double eps_term = kDefaultEpsTerm;
    int max_terms = kDefaultMaxTerms;
    double eps_verify = kDefaultEpsVerify;
    bool compensated = false;
    int degree_cap = kDefaultDegreeCap;
  };

  /// Throws DomainError unless 0 < |q| < 1 and the options are valid.
  explicit QContext(cplx q) : QContext(q, Options{}) {}
  QContext(cplx q, const Options& options);

  /// Like the constructor, but QASKEY_MAX_TERMS in the environment overrides
  /// options.max_terms.
  static QContext from_env(cplx q, Options options);
  static QContext from_env(cplx q) { return from_env(q, Options{}); }

  cplx q() const noexcept { return q_; }
  double eps_term() const noexcept { return opts_.eps_term; }
  int max_terms() const noexcept { return opts_.max_terms; }
  double eps_verify() const noexcept { return opts_.eps_verify; }
  bool compensated() const noexcept { return opts_.compensated; }
  int degree_cap() const noexcept { return opts_.degree_cap; }
  const Options& options() const noexcept { return opts_; }

  bool is_real() const noexcept;
  /// q as a real number in (0, 1); throws DomainError otherwise.
  double real_q() const;

  /// q^e for integer e (exact repeated squaring for small |e|).
  cplx pow(long e) const;
  /// q^e as a LogComplex, safe for huge exponents such as binom(n,2) * 6.
  LogComplex log_pow(double e) const;

  QContext with_max_terms(int max_terms) const;
  QContext with_eps_term(double eps_term) const;

 private:
  cplx q_;
  Options opts_;
  cplx log_q_;
};

}  // namespace qaskey
