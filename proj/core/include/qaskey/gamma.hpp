#pragma once

namespace qaskey {

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);

/// 1/Gamma(x) for all real x; 0 at the poles 0, -1, -2, ...
double gamma_recip(double x);

/// 1 / (Gamma(1 + a + x) Gamma(1 + a - x)), even in x. Uses reflection and
/// an accurate Gamma ratio so large |x| neither overflows nor loses digits.
double recip_gamma_pair(double a, double x);

}  // namespace qaskey
