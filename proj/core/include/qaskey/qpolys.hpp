#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "qaskey/context.hpp"
#include "qaskey/log_complex.hpp"
#include "qaskey/qcore.hpp"

namespace qaskey {

/// The five q^{-1}-symmetric families, tagged by their parameter count.
enum class FamilyTag {
  AskeyWilson4,     ///< q^{-1}-Askey-Wilson p_n(x; a, b, c, d | q)
  DualHahn3,        ///< continuous dual q^{-1}-Hahn p_n(x; a, b, c | q)
  AlSalamChihara2,  ///< q^{-1}-Al-Salam-Chihara Q_n(x; a, b | q)
  BigHermite1,      ///< continuous big q^{-1}-Hermite H_n(x; a | q)
  Hermite0,         ///< continuous q^{-1}-Hermite H_n(x | q)
};

std::size_t arity(FamilyTag tag);
std::string_view family_name(FamilyTag tag);
/// Accepts "aw", "dh", "asc", "bigh", "hermite" and the long enum names.
FamilyTag parse_family(std::string_view name);

class Family {
 public:
  /// Throws DomainError when params.size() != arity(tag).
  Family(FamilyTag tag, ParamMultiset params);

  static Family askey_wilson(cplx a, cplx b, cplx c, cplx d) {
    return {FamilyTag::AskeyWilson4, {a, b, c, d}};
  }
  static Family dual_hahn(cplx a, cplx b, cplx c) { return {FamilyTag::DualHahn3, {a, b, c}}; }
  static Family al_salam_chihara(cplx a, cplx b) {
    return {FamilyTag::AlSalamChihara2, {a, b}};
  }
  static Family big_hermite(cplx a) { return {FamilyTag::BigHermite1, {a}}; }
  static Family hermite() { return {FamilyTag::Hermite0, {}}; }

  FamilyTag tag() const noexcept { return tag_; }
  const ParamMultiset& params() const noexcept { return params_; }
  std::size_t arity() const noexcept { return params_.size(); }

  /// The family one step up the limit chain with `extra` appended
  /// (Hermite -> big Hermite -> ... -> Askey-Wilson).
  Family extended(cplx extra) const;

 private:
  FamilyTag tag_;
  ParamMultiset params_;
};

/// A point z != 0 with x = (z - 1/z) / 2. z and -1/z give the same x.
class ZPoint {
 public:
  explicit ZPoint(cplx z);
  /// Principal branch z = x + sqrt(x^2 + 1).
  static ZPoint from_x(cplx x);

  cplx z() const noexcept { return z_; }
  cplx x() const { return 0.5 * (z_ - 1.0 / z_); }
  ZPoint involution() const { return ZPoint(-1.0 / z_); }

 private:
  cplx z_;
};

/// Which terminating representation to use.
///   Askey-Wilson: First = 4phi3 in z/a, -1/(az); Second = 4phi3 in z/a, z/b
///   (canonical). Dual Hahn: First = 3phi2 with argument q; Second = 3phi2
///   with argument -q^n/(bc) (canonical). Big Hermite: First = 3phi0;
///   Second = z^n 2phi1(q^{-n}, -1/(az); 0; q, qa/z) (canonical, stable as
///   a -> 0). Al-Salam-Chihara and Hermite have a single form.
enum class Rep { Canonical, First, Second };

/// Number of representations implemented for a family (1 or 2).
int representation_count(FamilyTag tag);

/// Parameter order handed to a representation. The formulas single out one
/// or two parameters; putting the largest in those slots keeps 1/a factors
/// small and the terminating sums well conditioned.
enum class Orientation { LargestFirst, AsGiven };

/// Degree-n polynomial at pt, in log form so that large |z| cannot overflow.
/// Throws PoleError when a prefactor or denominator Pochhammer vanishes and
/// DomainError for n < 0, n > ctx.degree_cap() or an unavailable rep.
LogComplex eval_poly_log(const Family& fam, int n, const ZPoint& pt, const QContext& ctx,
                         Rep rep = Rep::Canonical,
                         Orientation orient = Orientation::LargestFirst);
cplx eval_poly(const Family& fam, int n, const ZPoint& pt, const QContext& ctx,
               Rep rep = Rep::Canonical, Orientation orient = Orientation::LargestFirst);

/// Evaluates fam.extended(h) at the same point; approaches eval_poly(fam)
/// linearly as h -> 0. Requires 0 < h <= 1e-3.
cplx eval_via_limit_chain(const Family& fam, int n, const ZPoint& pt, const QContext& ctx,
                          double h);

/// Ismail's Q_n(x; a, b) via its 2phi1, rescaled by
/// q^{-binom(n,2)} (-1)^n (q;q)_n onto the Al-Salam-Chihara normalization here.
cplx crossmap_ismail_asc(int n, const ZPoint& pt, cplx a, cplx b, const QContext& ctx);
/// Ismail's Q_n(x; a, b) itself.
cplx ismail_asc(int n, const ZPoint& pt, cplx a, cplx b, const QContext& ctx);

enum class IzzForm { V3, P4 };

/// Ismail-Zhang-Zhou normalizations, rescaled onto ours:
///   V3: q^{-2 binom(n,2)} (-bc)^n (-1/ab, -1/bc; q)_n V_n(x; qa, qb, qc | q)
///   P4: q^{-3 binom(n,2)} (-abcd)^n p_n(x, qa, qb, qc, qd)
cplx crossmap_izz(int n, const ZPoint& pt, const ParamMultiset& params, const QContext& ctx,
                  IzzForm which);

/// Classical Askey-Wilson p_n with e^{i theta} = w:
/// a^{-n} (ab, ac, ad; q)_n 4phi3(q^{-n}, abcd q^{n-1}, a w, a/w; ab, ac, ad; q, q).
cplx askey_wilson_classical(int n, cplx w, const ParamMultiset& params, const QContext& ctx);

/// Both sides of p_n(x; a,b,c,d | q) = q^{-3 binom(n,2)} (i abcd)^n
/// p^{AW}_n[iz; -i/a, -i/b, -i/c, -i/d | q]. The classical polynomial is taken
/// at e^{i theta} = iz, i.e. at argument i x.
std::pair<cplx, cplx> reciprocal_param_identity(int n, const ZPoint& pt,
                                                const ParamMultiset& params,
                                                const QContext& ctx);

}  // namespace qaskey
