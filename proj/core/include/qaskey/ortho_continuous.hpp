#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qaskey/context.hpp"
#include "qaskey/ortho_discrete.hpp"
#include "qaskey/qpolys.hpp"
#include "qaskey/quadrature.hpp"

namespace qaskey {

/// 1 / (2 pi)^{3/2}, the q -> 1 limit probed by t_constant_probe.
inline constexpr double kTLimit = 0.063493635934240969785;

/// Family weight on R for the continuous relations.
struct WeightSpec {
  Family fam;
  double alpha = 1.0;
};

/// (1 + q^{2x} alpha^2) (-q^{x+1} alpha a, q^{1-x} a / alpha; q)_inf q^{2x^2-x} alpha^{4x}.
/// Requires real q in (0, 1) and alpha > 0.
LogComplex continuous_weight_log(const WeightSpec& w, double x, const QContext& ctx);
cplx continuous_weight(const WeightSpec& w, double x, const QContext& ctx);

/// sqrt(2 pi) alpha exp(2 (log alpha)^2 / log q^{-1}) / (q^{1/8} sqrt(log q^{-1})).
double k00(double alpha, const QContext& ctx);

/// int e^{-x^2} alpha^{a x} dx = sqrt(pi) exp(a^2 (log alpha)^2 / 4).
double gaussian_power_integral(double a, double alpha);
/// The same integral by quadrature.
QuadratureResult gaussian_power_integral_quadrature(double a, double alpha);

struct JIntegral {
  cplx unit_interval;  ///< int_0^1 (-q^{2x} alpha^2, -q^{1-2x}/alpha^2; q)_inf q^{2x^2-x} alpha^{4x}
  cplx real_line;      ///< int_R (1 + q^{2x} alpha^2) q^{2x^2-x} alpha^{4x} / (q; q)_inf
  cplx closed;
  bool converged = true;
};
JIntegral j_integral(double alpha, const QContext& ctx);

/// K_{m,n}: the real-line integral of P_m P_n against the family weight.
/// Askey-Wilson requires |abcd| < |q|^{2N-1}, N = max(m, n).
QuadratureResult continuous_inner(const Family& fam, double alpha, int m, int n,
                                  const QContext& ctx);
/// The closed form of K_{n,n}.
cplx continuous_closed_form(const Family& fam, double alpha, int n, const QContext& ctx);
/// All K_{m,n}, m, n <= N, against the closed diagonal.
GramReport continuous_gram(const Family& fam, double alpha, int max_degree, const QContext& ctx);

struct CorrespondenceReport {
  cplx real_line;      ///< continuous_inner
  cplx unit_interval;  ///< int_0^1 Psi_{m,n}(q^y alpha) q^{2y^2-y} alpha^{4y} dy
  double scale = 0.0;  ///< sqrt(|K_mm K_nn|) from the closed forms
  double defect = 0.0; ///< |real_line - unit_interval| / scale
  bool converged = true;
};
/// Integrates the lattice sum over one period and compares it with the
/// real-line integral.
CorrespondenceReport discrete_to_continuous_check(const Family& fam, double alpha, int m, int n,
                                                  const QContext& ctx);

/// (quadrature, closed form) of the q-beta integral; requires |abcd| < |q|^{-1}.
std::pair<cplx, cplx> qbeta_integral(double alpha, const ParamMultiset& params4,
                                     const QContext& ctx);

struct BetaCheck {
  double quadrature = 0.0;
  double dougall = 0.0;
  double closed = 0.0;
  double quadrature_tail = 0.0;
  bool converged = true;
};
/// The symmetric beta integral three ways. Requires a + b + c + d > -1.
BetaCheck beta_integral_check(const std::array<double, 4>& a);

/// Imaginary part of int e^{2 i pi x} sin^4(pi x) / x^3 dx.
double sin4_integral();

/// (int e^{-ixt} / (Gamma(1+a+x) Gamma(1+a-x)) dx, (2 cos(t/2))^{2a} / Gamma(2a+1) on |t| < pi).
/// Requires a > -1/2.
std::pair<double, double> ramanujan_fourier_pair(double a, double t);

/// exp(-pi^2 / (2 log q^{-1})) / ((q; q)_inf^3 (1 - q)^{3/2}) for each q in (0, 1).
std::vector<double> t_constant_probe(const std::vector<double>& qs);

}  // namespace qaskey
