#include "qaskey/gamma.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

namespace qaskey {

double sin_pi(double x) {
  // Reduce to r in [-1, 1] with x = 2k + r, then fold into [-1/2, 1/2].
  if (x == std::trunc(x)) return 0.0;
  double r = std::remainder(x, 2.0);
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

double gamma_recip(double x) {
  if (x <= 0.0 && x == std::trunc(x)) return 0.0;
  if (x >= 0.5) {
    if (x > 170.0) return std::exp(-std::lgamma(x));
    return 1.0 / std::tgamma(x);
  }
  // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi.
  const double y = 1.0 - x;
  const double g = y > 170.0 ? std::exp(std::lgamma(y)) : std::tgamma(y);
  return sin_pi(x) * g / std::numbers::pi;
}

double recip_gamma_pair(double a, double x) {
  x = std::abs(x);
  if (x - a < 1.0) return gamma_recip(1.0 + a + x) * gamma_recip(1.0 + a - x);
  // 1/Gamma(1+a-x) = sin(pi (x - a)) Gamma(x - a) / pi, so the pair becomes
  // sin(pi (x - a)) / pi * Gamma(x - a) / Gamma(x + a + 1).
  const double ratio = boost::math::tgamma_delta_ratio(x - a, 2.0 * a + 1.0);
  return sin_pi(x - a) / std::numbers::pi * ratio;
}

}  // namespace qaskey
