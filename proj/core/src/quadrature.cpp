#include "qaskey/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "qaskey/error.hpp"

namespace qaskey {

namespace {

using Gauss = boost::math::quadrature::gauss<double, 20>;

template <class F>
auto gauss_panel(const F& f, double lo, double hi, double* abs_sum = nullptr) {
  const auto& x = Gauss::abscissa();
  const auto& w = Gauss::weights();
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  decltype(f(mid)) s{};
  double a = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto fp = f(mid + half * x[i]);
    const auto fm = f(mid - half * x[i]);
    s += w[i] * (fp + fm);
    a += w[i] * (std::abs(fp) + std::abs(fm));
  }
  if (abs_sum) *abs_sum += half * a;
  return s * half;
}

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

double gaussian_half_width(double q, double eps) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("gaussian_half_width: q must lie in (0, 1)");
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("gaussian_half_width: eps must lie in (0, 1)");
  return std::sqrt(std::log(1.0 / eps) / (2.0 * std::log(1.0 / q))) + 2.0;
}

QuadratureResult integrate_real_line(const Integrand& f, const QuadratureSpec& spec) {
  if (!(spec.step > 0.0)) throw DomainError("integrate_real_line: step must be positive");
  QuadratureResult r;
  double L = spec.half_width > 0.0 ? spec.half_width
                                   : gaussian_half_width(spec.decay_q, spec.envelope_eps);
  const double c = spec.center;

  // Peak estimate on a coarse grid, then widen each side until the
  // integrand is negligible over a few consecutive samples.
  double peak = 0.0;
  for (double x = -L; x <= L; x += 0.25) peak = std::max(peak, std::abs(f(c + x)));
  double lo = L;
  double hi = L;
  auto edge_small = [&](double x0, double dir) {
    for (int j = 0; j < 4; ++j) {
      const double v = std::abs(f(c + dir * (x0 + 0.5 * j)));
      peak = std::max(peak, v);
      if (!(v <= spec.envelope_eps * peak)) return false;
    }
    return true;
  };
  while (!edge_small(hi, +1.0)) {
    hi += 2.0;
    if (hi > spec.max_half_width) {
      r.failure = "envelope not reached on the right within the maximum half width";
      break;
    }
  }
  while (!edge_small(lo, -1.0)) {
    lo += 2.0;
    if (lo > spec.max_half_width) {
      r.failure = "envelope not reached on the left within the maximum half width";
      break;
    }
  }
  L = std::max(lo, hi);
  r.half_width = L;

  double h = spec.step;
  // Trapezoid sum over nodes c + j h, |j h| <= L.
  long nmax = static_cast<long>(std::ceil(L / h));
  cplx sum{0.0, 0.0};
  double abs_sum = 0.0;
  int nodes = 0;
  for (long j = -nmax; j <= nmax; ++j) {
    const cplx v = f(c + static_cast<double>(j) * h);
    sum += v;
    abs_sum += std::abs(v);
    ++nodes;
  }
  cplx t_prev = h * sum;
  int passes = 0;
  bool ok = false;
  for (int level = 1; level <= spec.refine_limit; ++level) {
    h *= 0.5;
    nmax *= 2;
    for (long j = -nmax + 1; j <= nmax; j += 2) {
      const cplx v = f(c + static_cast<double>(j) * h);
      sum += v;
      abs_sum += std::abs(v);
      ++nodes;
    }
    const cplx t = h * sum;
    const double scale = h * abs_sum;
    const double diff = std::abs(t - t_prev);
    t_prev = t;
    if (!finite(t)) break;
    if (diff <= spec.tol * scale) {
      if (++passes >= 2) {
        ok = true;
        r.tail_bound = diff;
        break;
      }
    } else {
      passes = 0;
    }
    r.tail_bound = diff;
  }
  r.value = t_prev;
  r.step = h;
  r.abs_integral = h * abs_sum;
  r.n_used = nodes;
  r.converged = ok && r.failure.empty();
  if (!ok && r.failure.empty()) r.failure = "step halving did not meet the convergence gate";
  if (!finite(r.value)) {
    r.converged = false;
    r.failure = "integrand produced a non-finite value";
  }
  return r;
}

QuadratureResult integrate_interval(const Integrand& f, double lo, double hi, double tol,
                                    int max_panels, double scale) {
  if (!(hi > lo)) throw DomainError("integrate_interval: need lo < hi");
  QuadratureResult r;
  r.converged = false;
  cplx prev{std::numeric_limits<double>::quiet_NaN(), 0.0};
  int passes = 0;
  int used = 0;
  for (int panels = 1; panels <= max_panels; panels *= 2) {
    const double w = (hi - lo) / panels;
    cplx s{0.0, 0.0};
    double abs_sum = 0.0;
    for (int p = 0; p < panels; ++p) s += gauss_panel(f, lo + p * w, lo + (p + 1) * w, &abs_sum);
    used += 20 * panels;
    const double diff = std::abs(s - prev);
    r.value = s;
    r.abs_integral = abs_sum;
    r.step = w;
    r.tail_bound = diff;
    prev = s;
    if (!finite(s)) break;
    if (diff <= tol * std::max({std::abs(s), abs_sum, scale})) {
      if (++passes >= 2) {
        r.converged = true;
        break;
      }
    } else {
      passes = 0;
    }
  }
  r.n_used = used;
  r.half_width = 0.5 * (hi - lo);
  if (!r.converged) r.failure = "panel doubling did not meet the convergence gate";
  return r;
}

QuadratureResult integrate_oscillatory(const std::function<double(double)>& f, double period,
                                       double tol, double max_x) {
  if (!(period > 0.0)) throw DomainError("integrate_oscillatory: period must be positive");
  QuadratureResult r;
  r.converged = false;
  const double w = 0.5 * period;
  auto g = [&](double x) { return f(x); };
  double partial = 0.0;
  double abs_sum = 0.0;
  double x = 0.0;
  double prev_avg = std::numeric_limits<double>::quiet_NaN();
  double target = 8.0 * period;
  int passes = 0;
  int used = 0;
  for (;;) {
    while (x + w <= target + 1e-12) {
      partial += gauss_panel(g, x, x + w, &abs_sum);
      x += w;
      used += 20;
    }
    // Mean of the partial integral over [x, x + period]: the periodic part
    // of the truncation error averages out.
    const double end = x + period;
    auto ramp = [&](double t) { return f(t) * (end - t) / period; };
    const double avg = partial + gauss_panel(ramp, x, x + w) + gauss_panel(ramp, x + w, end);
    used += 40;
    const double diff = std::abs(avg - prev_avg);
    r.value = avg;
    r.tail_bound = diff;
    r.half_width = target;
    prev_avg = avg;
    if (!std::isfinite(avg)) break;
    if (diff <= tol * std::max(std::abs(avg), abs_sum)) {
      if (++passes >= 2) {
        r.converged = true;
        break;
      }
    } else {
      passes = 0;
    }
    if (target * 2.0 > max_x) break;
    target *= 2.0;
  }
  r.abs_integral = abs_sum;
  r.step = w;
  r.n_used = used;
  if (!r.converged) r.failure = "truncation did not settle before the maximum length";
  return r;
}

}  // namespace qaskey
