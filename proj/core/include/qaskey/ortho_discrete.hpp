#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qaskey/context.hpp"
#include "qaskey/log_complex.hpp"
#include "qaskey/qhyper.hpp"
#include "qaskey/qpolys.hpp"

namespace qaskey {

/// A family on the lattice q^k alpha, k in Z, with degrees 0..max_degree.
class DiscreteOrthoSpec {
 public:
  /// Throws DomainError when alpha == 0, max_degree < 0, max_degree exceeds
  /// ctx.degree_cap(), or (Askey-Wilson) max_degree > admissible_degree().
  DiscreteOrthoSpec(Family fam, cplx alpha, int max_degree, QContext ctx);

  /// Largest N with |q abcd| < |q|^{2N} for Askey-Wilson (-1 if none);
  /// ctx.degree_cap() for the other families.
  static int admissible_degree(const Family& fam, const QContext& ctx);

  const Family& family() const noexcept { return fam_; }
  cplx alpha() const noexcept { return alpha_; }
  int max_degree() const noexcept { return max_degree_; }
  const QContext& ctx() const noexcept { return ctx_; }

 private:
  Family fam_;
  cplx alpha_;
  int max_degree_;
  QContext ctx_;
};

/// sum_k (1 + q^{2k} alpha^2) P_m P_n W_k over the lattice z = q^k alpha.
/// Throws PoleError (index = k) when the weight has a pole on the lattice.
BilateralResult discrete_inner(const DiscreteOrthoSpec& spec, int m, int n);

/// The lattice weight W_k of the family in log form (zero outside its support).
LogComplex discrete_weight_log(const Family& fam, cplx alpha, long k, const QContext& ctx);

/// q^{-6 binom(n,2)} (-a^2b^2c^2d^2)^n ... for Askey-Wilson, and the analogous
/// finite factor for the smaller families. Shared by the discrete and
/// continuous norms.
LogComplex norm_finite_factor(const Family& fam, int n, const QContext& ctx);

/// prod_{i<j} (-q a_i a_j; q)_inf, divided by (q abcd; q)_inf for Askey-Wilson.
LogComplex norm_pair_factor(const Family& fam, const QContext& ctx);

/// Closed-form squared norm h_n, including the alpha-dependent products.
/// Throws PoleError when a denominator product vanishes.
cplx closed_norm(const DiscreteOrthoSpec& spec, int n);

struct GramReport {
  std::vector<std::vector<cplx>> computed;
  std::vector<cplx> closed_form_diag;
  /// Off-diagonal: |G_mn| / sqrt(|h_m h_n|). Diagonal: |G_nn - h_n| / |h_n|.
  std::vector<std::vector<double>> defect;
  double worst_offdiag = 0.0;
  double worst_diag = 0.0;
  /// Entries whose evaluation threw; their defect is +inf.
  std::vector<std::string> failures;

  bool ok(double tol) const { return failures.empty() && worst_offdiag <= tol && worst_diag <= tol; }
};

/// Fills a report from a matrix and its diagonal norms.
GramReport make_gram_report(std::vector<std::vector<cplx>> computed, std::vector<cplx> closed,
                            std::vector<std::string> failures);

GramReport gram(const DiscreteOrthoSpec& spec);

/// (direct bilateral sum, closed product) for the Askey-Wilson total mass.
std::pair<cplx, cplx> total_mass(const ParamMultiset& params4, cplx alpha, const QContext& ctx);

}  // namespace qaskey
