#include "qaskey/context.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "qaskey/error.hpp"

namespace qaskey {

QContext::QContext(cplx q, const Options& options) : q_(q), opts_(options) {
  const double m = std::abs(q);
  if (!(m > 0.0) || !(m < 1.0)) throw DomainError("QContext: require 0 < |q| < 1");
  if (!(opts_.eps_term > 0.0)) throw DomainError("QContext: eps_term must be positive");
  if (!(opts_.eps_verify > 0.0)) throw DomainError("QContext: eps_verify must be positive");
  if (opts_.max_terms < 16) throw DomainError("QContext: max_terms must be at least 16");
  if (opts_.degree_cap < 0) throw DomainError("QContext: degree_cap must be nonnegative");
  log_q_ = std::log(q_);
}

QContext QContext::from_env(cplx q, Options options) {
  if (const char* env = std::getenv("QASKEY_MAX_TERMS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0') {
      throw DomainError(std::string("QASKEY_MAX_TERMS is not an integer: ") + env);
    }
    options.max_terms = static_cast<int>(v);
  }
  return QContext(q, options);
}

bool QContext::is_real() const noexcept { return q_.imag() == 0.0 && q_.real() > 0.0; }

double QContext::real_q() const {
  if (!is_real()) throw DomainError("operation requires real q in (0, 1)");
  return q_.real();
}

cplx QContext::pow(long e) const {
  if (is_real()) return {std::pow(q_.real(), static_cast<double>(e)), 0.0};
  cplx base = e < 0 ? 1.0 / q_ : q_;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  cplx r{1.0, 0.0};
  while (k != 0) {
    if (k & 1U) r *= base;
    base *= base;
    k >>= 1U;
  }
  return r;
}

LogComplex QContext::log_pow(double e) const { return LogComplex::from_log(e * log_q_); }

QContext QContext::with_max_terms(int max_terms) const {
  Options o = opts_;
  o.max_terms = max_terms;
  return QContext(q_, o);
}

QContext QContext::with_eps_term(double eps_term) const {
  Options o = opts_;
  o.eps_term = eps_term;
  return QContext(q_, o);
}

}  // namespace qaskey
