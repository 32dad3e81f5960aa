#include "qaskey/log_complex.hpp"

#include <cmath>
#include <numbers>

namespace qaskey {

double wrap_phase(double phase) {
  if (!std::isfinite(phase)) return phase;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(phase, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

LogComplex::LogComplex(double log_mag, double phase)
    : log_mag_(log_mag), phase_(wrap_phase(phase)) {}

LogComplex LogComplex::from(cplx z) {
  if (z == cplx{0.0, 0.0}) return zero();
  // std::abs uses hypot, so huge and tiny components are safe.
  return {std::log(std::abs(z)), std::arg(z)};
}

LogComplex LogComplex::from_log(cplx log_z) { return {log_z.real(), log_z.imag()}; }

bool LogComplex::is_zero() const noexcept {
  return std::isinf(log_mag_) && log_mag_ < 0;
}

bool LogComplex::is_finite() const noexcept { return std::isfinite(log_mag_); }

cplx LogComplex::value() const {
  if (is_zero()) return {0.0, 0.0};
  const double mag = std::exp(log_mag_);
  // Phases of real quantities drift by a few ulp through repeated products.
  constexpr double kSnap = 1e-14;
  if (std::abs(phase_) <= kSnap) return {mag, 0.0};
  if (std::numbers::pi - std::abs(phase_) <= kSnap) return {-mag, 0.0};
  return std::polar(mag, phase_);
}

LogComplex& LogComplex::operator*=(const LogComplex& rhs) {
  if (is_zero() || rhs.is_zero()) {
    *this = zero();
    return *this;
  }
  log_mag_ += rhs.log_mag_;
  phase_ = wrap_phase(phase_ + rhs.phase_);
  return *this;
}

LogComplex& LogComplex::operator/=(const LogComplex& rhs) {
  if (is_zero()) return *this;
  log_mag_ -= rhs.log_mag_;
  phase_ = wrap_phase(phase_ - rhs.phase_);
  return *this;
}

LogComplex LogComplex::pow(long e) const {
  if (e == 0) return {};
  if (is_zero()) return e > 0 ? zero() : LogComplex{std::numeric_limits<double>::infinity(), 0.0};
  // Integer powers: wrap the phase before scaling to keep it small.
  return {log_mag_ * static_cast<double>(e),
          std::fmod(phase_ * static_cast<double>(e), 2.0 * std::numbers::pi)};
}

LogComplex LogComplex::pow(double e) const {
  if (is_zero()) return e > 0 ? zero() : LogComplex{};
  return {log_mag_ * e, phase_ * e};
}

LogComplex LogComplex::inverse() const { return LogComplex{} / *this; }

LogComplex LogComplex::operator-() const {
  if (is_zero()) return *this;
  return {log_mag_, phase_ + std::numbers::pi};
}

}  // namespace qaskey
