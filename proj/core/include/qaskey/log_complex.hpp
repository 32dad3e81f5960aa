#pragma once

#include <complex>
#include <limits>

namespace qaskey {

using cplx = std::complex<double>;

/// A complex number stored as (log|z|, arg z). Products and powers never
/// overflow; zero is represented by log_mag = -inf.
class LogComplex {
 public:
  /// The value 1.
  LogComplex() = default;
  LogComplex(double log_mag, double phase);

  static LogComplex from(cplx z);
  /// exp(log_z) for an arbitrary complex logarithm.
  static LogComplex from_log(cplx log_z);
  static LogComplex zero() { return {-std::numeric_limits<double>::infinity(), 0.0}; }

  double log_mag() const noexcept { return log_mag_; }
  double phase() const noexcept { return phase_; }
  bool is_zero() const noexcept;
  bool is_finite() const noexcept;

  /// Phases within 1e-14 of 0 or pi are returned as exact reals.
  cplx value() const;
  /// Principal logarithm; -inf real part for zero.
  cplx log() const { return {log_mag_, phase_}; }

  LogComplex& operator*=(const LogComplex& rhs);
  LogComplex& operator/=(const LogComplex& rhs);
  LogComplex pow(long e) const;
  LogComplex pow(double e) const;
  LogComplex inverse() const;
  LogComplex operator-() const;

  friend LogComplex operator*(LogComplex lhs, const LogComplex& rhs) { return lhs *= rhs; }
  friend LogComplex operator/(LogComplex lhs, const LogComplex& rhs) { return lhs /= rhs; }

 private:
  double log_mag_ = 0.0;
  double phase_ = 0.0;
};

/// Wraps an angle into (-pi, pi].
double wrap_phase(double phase);

}  // namespace qaskey
