#pragma once

#include <functional>
#include <string>

#include "qaskey/log_complex.hpp"
#include "qaskey/series.hpp"

namespace qaskey {

using Integrand = std::function<cplx(double)>;

/// Trapezoid parameters for integrands with Gaussian-type decay on R.
struct QuadratureSpec {
  /// Initial half width; 0 selects it from `decay_q` and `envelope_eps`.
  double half_width = 0.0;
  double step = 0.5;
  double center = 0.0;
  /// Maximum number of step halvings.
  int refine_limit = 8;
  /// Acceptance: two successive halvings change the sum by at most
  /// tol * h * sum |f|.
  double tol = 1e-12;
  /// Base of the expected q^{2x^2} envelope, used for the initial width.
  double decay_q = 0.5;
  /// The window is widened until |f| at its edges is below envelope_eps * peak.
  double envelope_eps = 1e-18;
  double max_half_width = 600.0;
};

struct QuadratureResult : SeriesResult<cplx> {
  double half_width = 0.0;
  double step = 0.0;
  /// h * sum |f| at the final step; the scale used by the gate.
  double abs_integral = 0.0;
  /// Empty on success, otherwise why the result was not accepted.
  std::string failure;
};

/// L = sqrt(log(1 / eps) / (2 log q^{-1})) + 2.
double gaussian_half_width(double q, double eps);

/// Equal-step trapezoid on [center - L, center + L], L widened by sampling
/// until the envelope test passes, with step halving until the gate passes.
QuadratureResult integrate_real_line(const Integrand& f, const QuadratureSpec& spec = {});

/// Composite 20-point Gauss-Legendre on [lo, hi]; the panel count doubles
/// until two successive refinements agree within tol * max(|I|, int |f|, scale).
/// `scale` matters for integrands that vanish identically up to rounding.
QuadratureResult integrate_interval(const Integrand& f, double lo, double hi, double tol,
                                    int max_panels = 1024, double scale = 0.0);

/// Integral over [0, inf) of an algebraically decaying oscillatory f whose
/// oscillation has the given period. The partial integral is averaged over one
/// period past the cutoff X, and X doubles until two successive averages agree
/// within tol * max(|I|, int |f|).
QuadratureResult integrate_oscillatory(const std::function<double(double)>& f, double period,
                                       double tol, double max_x = 1 << 16);

}  // namespace qaskey
