// Acceptance battery: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qaskey/error.hpp"
#include "qaskey/ortho_continuous.hpp"
#include "qaskey/ortho_discrete.hpp"
#include "qaskey/qcore.hpp"
#include "qaskey/qpolys.hpp"

using namespace qaskey;

namespace {

constexpr double kPi = std::numbers::pi;
using Rng = std::mt19937_64;

double uni(Rng& rng, double lo, double hi) {
  double v;
  do v = std::uniform_real_distribution<double>(lo, hi)(rng);
  while (v == lo);
  return v;
}

std::vector<cplx> draw(Rng& rng, int count, double hi) {
  std::vector<cplx> p;
  for (int i = 0; i < count; ++i) p.emplace_back(uni(rng, 0.0, hi));
  return p;
}

double rel(cplx a, cplx b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

struct Outcome {
  double worst = 0.0;
  double tol = 0.0;
  std::string note;
  bool ok() const { return worst <= tol; }
};

// Keeps the largest defect; NaN counts as infinite.
void track(Outcome& o, double d) {
  if (std::isnan(d)) d = INFINITY;
  o.worst = std::max(o.worst, d);
}

Outcome c1_representations(Rng& rng) {
  Outcome o{0.0, 1e-10, "AW and dual Hahn rep1 vs rep2, 100 samples, n <= 6"};
  for (int s = 0; s < 100; ++s) {
    const QContext ctx(uni(rng, 0.2, 0.8));
    const auto p = draw(rng, 4, 0.6);
    const ZPoint pt(uni(rng, 0.5, 2.0));
    const Family aw(FamilyTag::AskeyWilson4, ParamMultiset(p));
    const Family dh(FamilyTag::DualHahn3, ParamMultiset({p[0], p[1], p[2]}));
    for (int n = 0; n <= 6; ++n) {
      track(o, rel(eval_poly(aw, n, pt, ctx, Rep::First), eval_poly(aw, n, pt, ctx, Rep::Second)));
      track(o, rel(eval_poly(dh, n, pt, ctx, Rep::First), eval_poly(dh, n, pt, ctx, Rep::Second)));
    }
  }
  return o;
}

Outcome c2_symmetry(Rng& rng) {
  Outcome o{0.0, 1e-10, "24 orderings of the AW parameters, 20 samples, n <= 5"};
  for (int s = 0; s < 20; ++s) {
    const QContext ctx(uni(rng, 0.2, 0.8));
    const auto p = draw(rng, 4, 0.6);
    const ZPoint pt(uni(rng, 0.5, 2.0));
    std::array<int, 4> idx{0, 1, 2, 3};
    for (int n = 0; n <= 5; ++n) {
      const cplx ref = eval_poly(Family(FamilyTag::AskeyWilson4, ParamMultiset(p)), n, pt, ctx);
      std::sort(idx.begin(), idx.end());
      do {
        const ParamMultiset perm({p[idx[0]], p[idx[1]], p[idx[2]], p[idx[3]]});
        const cplx v = eval_poly(Family(FamilyTag::AskeyWilson4, perm), n, pt, ctx,
                                 Rep::Canonical, Orientation::AsGiven);
        track(o, rel(v, ref));
      } while (std::next_permutation(idx.begin(), idx.end()));
    }
  }
  return o;
}

Outcome c3_discrete(Rng& rng) {
  Outcome o{0.0, 1e-8, "Gram matrices, five families, q in {0.3, 0.5, 0.7}"};
  int aw_min_n = 99;
  for (double q : {0.3, 0.5, 0.7}) {
    const QContext ctx(q);
    for (FamilyTag tag : {FamilyTag::AskeyWilson4, FamilyTag::DualHahn3,
                          FamilyTag::AlSalamChihara2, FamilyTag::BigHermite1, FamilyTag::Hermite0}) {
      const Family fam(tag, ParamMultiset(draw(rng, static_cast<int>(arity(tag)), 0.5)));
      int N = 5;
      if (tag == FamilyTag::AskeyWilson4) {
        N = std::min(N, DiscreteOrthoSpec::admissible_degree(fam, ctx));
        aw_min_n = std::min(aw_min_n, N);
      }
      const GramReport g = gram(DiscreteOrthoSpec(fam, 1.0, N, ctx));
      if (!g.failures.empty()) track(o, INFINITY);
      track(o, g.worst_offdiag);
      track(o, g.worst_diag);
    }
  }
  o.note += ", smallest AW N = " + std::to_string(aw_min_n);
  return o;
}

Outcome c4_mass(Rng& rng) {
  Outcome o{0.0, 1e-10, "AW total mass, 20 sets with |qabcd| < 0.5"};
  int done = 0;
  while (done < 20) {
    const double q = uni(rng, 0.2, 0.8);
    const auto p = draw(rng, 4, 0.9);
    const double alpha = uni(rng, 0.7, 1.5);
    const ParamMultiset ms(p);
    if (!(std::abs(q * ms.product()) < 0.5)) continue;
    const auto [direct, closed] = total_mass(ms, alpha, QContext(q));
    track(o, rel(direct, closed));
    ++done;
  }
  return o;
}

Outcome c5_hermite_continuous() {
  Outcome o{0.0, 1e-8, "continuous Hermite K_{m,n}, m,n <= 4, q = 0.5"};
  const QContext ctx(0.5);
  const double q = 0.5;
  std::array<double, 5> h{};
  double qq = 1.0;
  for (int n = 0; n <= 4; ++n) {
    if (n > 0) qq *= 1.0 - std::pow(q, n);
    h[static_cast<std::size_t>(n)] = std::pow(q, -static_cast<double>(binom2(n))) * qq *
                                     std::pow(q, -n - 0.125) * std::sqrt(2 * kPi / std::log(2.0));
  }
  const Family f = Family::hermite();
  for (int m = 0; m <= 4; ++m) {
    for (int n = m; n <= 4; ++n) {
      const auto r = continuous_inner(f, 1.0, m, n, ctx);
      if (!r.converged) track(o, INFINITY);
      const auto hm = h[static_cast<std::size_t>(m)], hn = h[static_cast<std::size_t>(n)];
      if (m == n) {
        track(o, std::abs(r.value - hn) / hn);
      } else {
        track(o, std::abs(r.value) / std::sqrt(hm * hn));
      }
    }
  }
  return o;
}

Outcome c6_j() {
  Outcome o{0.0, 1e-9, "J integral: unit interval, real line, closed form"};
  for (double alpha : {1.0, 2.0}) {
    for (double q : {0.3, 0.5}) {
      const JIntegral j = j_integral(alpha, QContext(q));
      if (!j.converged) track(o, INFINITY);
      track(o, rel(j.unit_interval, j.closed));
      track(o, rel(j.real_line, j.closed));
      track(o, rel(j.unit_interval, j.real_line));
    }
  }
  return o;
}

Outcome c7_qbeta(Rng& rng) {
  Outcome o{0.0, 1e-8, "q-beta integral, 10 sets, alpha in {1, 1.5}"};
  int done = 0;
  while (done < 10) {
    const double q = uni(rng, 0.2, 0.8);
    const auto p = draw(rng, 4, 0.9);
    const ParamMultiset ms(p);
    if (!(std::abs(ms.product()) < 0.5 / q)) continue;
    const double alpha = done % 2 == 0 ? 1.0 : 1.5;
    const auto [quad, closed] = qbeta_integral(alpha, ms, QContext(q));
    track(o, rel(quad, closed));
    ++done;
  }
  return o;
}

Outcome c8_correspondence(Rng& rng) {
  Outcome o{0.0, 1e-7, "line integral vs one-period lattice integral, m,n <= 3"};
  const QContext ctx(0.5);
  for (FamilyTag tag : {FamilyTag::Hermite0, FamilyTag::BigHermite1, FamilyTag::AlSalamChihara2,
                        FamilyTag::DualHahn3, FamilyTag::AskeyWilson4}) {
    const Family fam(tag, ParamMultiset(draw(rng, static_cast<int>(arity(tag)), 0.5)));
    for (int m = 0; m <= 3; ++m) {
      for (int n = m; n <= 3; ++n) {
        const auto r = discrete_to_continuous_check(fam, 1.0, m, n, ctx);
        if (!r.converged) track(o, INFINITY);
        track(o, r.defect);
      }
    }
  }
  return o;
}

Outcome c9_beta() {
  Outcome o{0.0, 1.0, "Dougall vs closed (1e-9), quadrature (1e-4), sin^4 (1e-6)"};
  // each sub-check is scaled by its own threshold, so the criterion passes at worst <= 1
  const BetaCheck b = beta_integral_check({0.1, 0.2, 0.3, 0.4});
  track(o, rel(b.dougall, b.closed) / 1e-9);
  track(o, rel(b.quadrature, b.closed) / 1e-4);
  const BetaCheck z = beta_integral_check({0.0, 0.0, 0.0, 0.0});
  track(o, rel(z.dougall, z.closed) / 1e-9);
  track(o, rel(z.closed, -1.0 / (2 * kPi * kPi)) / 1e-9);
  track(o, std::abs(sin4_integral() - kPi * kPi * kPi / 4.0) / 1e-6);
  return o;
}

Outcome c10_fourier() {
  Outcome o{0.0, 1e-6, "Fourier pair at (0.5, 0), (1, pi/2), (1, 3.5)"};
  const std::array<std::pair<double, double>, 3> pts{{{0.5, 0.0}, {1.0, kPi / 2}, {1.0, 3.5}}};
  for (const auto& [a, t] : pts) {
    const auto [quad, closed] = ramanujan_fourier_pair(a, t);
    track(o, std::abs(quad - closed));
  }
  return o;
}

Outcome c11_t() {
  Outcome o{0.0, 5e-3, "T probe at q = 0.999 vs (2 pi)^{-3/2}"};
  track(o, std::abs(t_constant_probe({0.999})[0] - std::pow(2 * kPi, -1.5)));
  return o;
}

Outcome c12_qgamma() {
  Outcome o{0.0, 5e-3, "Gamma_0.999(x) vs Gamma(x), x in {0.5, 1.5, 2.5}"};
  const QContext ctx = QContext(0.999).with_max_terms(200000);
  for (double x : {0.5, 1.5, 2.5}) track(o, std::abs(qgamma(x, ctx) - std::tgamma(x)));
  return o;
}

Outcome c13_limit(Rng& rng) {
  Outcome o{0.0, 1e-4, "extra parameter h = 1e-6 vs sub-family, n <= 4 (normwise)"};
  for (FamilyTag sub : {FamilyTag::DualHahn3, FamilyTag::AlSalamChihara2, FamilyTag::BigHermite1,
                        FamilyTag::Hermite0}) {
    for (int s = 0; s < 10; ++s) {
      const QContext ctx(uni(rng, 0.2, 0.8));
      const Family fam(sub, ParamMultiset(draw(rng, static_cast<int>(arity(sub)), 0.6)));
      const ZPoint pt(uni(rng, 0.5, 2.0));
      for (int n = 0; n <= 4; ++n) {
        double scale = 0.0;
        for (int i = 0; i <= 8; ++i) {
          scale = std::max(scale, std::abs(eval_poly(fam, n, ZPoint(0.5 + 1.5 * i / 8.0), ctx)));
        }
        const cplx ref = eval_poly(fam, n, pt, ctx);
        scale = std::max(scale, std::abs(ref));
        track(o, std::abs(eval_via_limit_chain(fam, n, pt, ctx, 1e-6) - ref) / scale);
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome(Rng&)> run;
  };
  const std::vector<Criterion> list{
      {1, "representation equivalence", c1_representations},
      {2, "parameter symmetry", c2_symmetry},
      {3, "discrete orthogonality", c3_discrete},
      {4, "total mass", c4_mass},
      {5, "continuous Hermite orthogonality", [](Rng&) { return c5_hermite_continuous(); }},
      {6, "J integral", [](Rng&) { return c6_j(); }},
      {7, "q-beta integral", c7_qbeta},
      {8, "correspondence triangulation", c8_correspondence},
      {9, "beta integral", [](Rng&) { return c9_beta(); }},
      {10, "Fourier pair", [](Rng&) { return c10_fourier(); }},
      {11, "T-constant probe", [](Rng&) { return c11_t(); }},
      {12, "q-gamma limit", [](Rng&) { return c12_qgamma(); }},
      {13, "limit chain", c13_limit},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const Criterion& c : list) {
    Rng rng(0x5eed0000ULL + static_cast<unsigned long long>(c.id));
    Outcome o;
    try {
      o = c.run(rng);
    } catch (const std::exception& e) {
      o = {INFINITY, 0.0, std::string("threw: ") + e.what()};
    }
    if (!o.ok()) ++failed;
    std::printf("%s %2d %-34s worst %.3e  tol %.1e  (%s)\n", o.ok() ? "PASS" : "FAIL", c.id,
                c.title, o.worst, o.tol, o.note.c_str());
    std::fflush(stdout);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(list.size()) - failed,
              list.size(), secs);
  return failed == 0 ? 0 : 1;
}
