#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracle_values.hpp"
#include "qaskey/error.hpp"
#include "qaskey/ortho_continuous.hpp"
#include "qaskey/quadrature.hpp"
#include "test_util.hpp"

using namespace qaskey;
namespace orc = qaskey::oracle;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("quadrature") {

TEST_CASE("gaussian-type integrands on the line") {
  const auto g = integrate_real_line([](double x) { return cplx{std::exp(-x * x)}; },
                                     {.decay_q = std::exp(-0.5)});
  CHECK(g.converged);
  CHECK_REL(g.value, cplx{std::sqrt(kPi)}, 1e-12);
  const auto odd = integrate_real_line([](double x) { return cplx{x * std::exp(-x * x)}; },
                                       {.decay_q = std::exp(-0.5)});
  CHECK(std::abs(odd.value) < 1e-13);

  const double q = 0.5;
  const auto w = integrate_real_line(
      [=](double x) { return cplx{(1.0 + std::pow(q, 2 * x)) * std::pow(q, 2 * x * x - x)}; },
      {.center = 0.25, .decay_q = q});
  CHECK_REL(w.value, cplx{std::pow(q, -0.125) * std::sqrt(2.0 * kPi / std::log(2.0))}, 1e-12);
  CHECK(w.half_width > 0.0);
  CHECK(w.abs_integral > 0.0);
}

TEST_CASE("gate failure is reported, not thrown") {
  QuadratureSpec s;
  s.refine_limit = 0;
  s.tol = 1e-15;
  const auto r = integrate_real_line([](double x) { return cplx{std::exp(-x * x) * std::cos(40 * x)}; }, s);
  CHECK_FALSE(r.converged);
  CHECK_FALSE(r.failure.empty());
}

TEST_CASE("half width rule") {
  CHECK_REL(gaussian_half_width(0.5, 1e-18),
            std::sqrt(std::log(1e18) / (2.0 * std::log(2.0))) + 2.0, 1e-15);
}

TEST_CASE("finite intervals") {
  const auto p = integrate_interval([](double x) { return cplx{std::pow(x, 5)}; }, 0.0, 1.0, 1e-13);
  CHECK(p.converged);
  CHECK_REL(p.value, cplx{1.0 / 6.0}, 1e-14);
  const auto z = integrate_interval([](double x) { return cplx{1e-18 * std::sin(1e3 * x)}; }, 0.0,
                                    1.0, 1e-10, 1024, 1.0);
  CHECK(z.converged);
  const auto hard = integrate_interval([](double x) { return cplx{std::sqrt(std::abs(x - 0.3))}; },
                                       0.0, 1.0, 1e-15, 4);
  CHECK_FALSE(hard.converged);
}

TEST_CASE("oscillatory half line") {
  const auto r = integrate_oscillatory([](double x) { return x == 0.0 ? 2 * kPi : std::sin(2 * kPi * x) / x; },
                                       1.0, 1e-8);
  CHECK(r.converged);
  CHECK(std::abs(r.value.real() - kPi / 2.0) < 1e-6);
}

}  // TEST_SUITE

TEST_SUITE("ortho-continuous") {

TEST_CASE("gaussian building blocks") {
  CHECK_REL(gaussian_power_integral(0.0, 3.0), std::sqrt(kPi), 1e-15);
  CHECK_REL(gaussian_power_integral(5.0, 1.0), std::sqrt(kPi), 1e-15);
  CHECK_REL(gaussian_power_integral(2.0, std::exp(1.0)), std::sqrt(kPi) * std::exp(1.0), 1e-15);
  CHECK_REL(gaussian_power_integral_quadrature(2.0, std::exp(1.0)).value,
            cplx{std::sqrt(kPi) * std::exp(1.0)}, 1e-12);
  CHECK_REL(k00(1.5, QContext(0.4)), orc::kK00_a15_q04, 1e-14);
  CHECK_THROWS_AS(k00(-1.0, QContext(0.4)), DomainError);
}

TEST_CASE("weights") {
  const QContext ctx(0.5);
  const WeightSpec h{Family::hermite(), 1.0};
  for (double x : {-2.3, 0.0, 0.7, 3.1}) {
    CHECK_REL(continuous_weight(h, x, ctx),
              cplx{(1.0 + std::pow(0.5, 2 * x)) * std::pow(0.5, 2 * x * x - x)}, 1e-13);
  }
  const WeightSpec aw{Family::askey_wilson(0.2, 0.3, 0.25, 0.35), 1.3};
  // positive while q^{1-x} a / alpha < 1 for every parameter, here x < 2.89
  for (double x = -6.0; x <= 6.0; x += 0.37) {
    const cplx w = continuous_weight(aw, x, ctx);
    CHECK(w.imag() == 0.0);
    if (x < 2.85) CHECK(w.real() > 0.0);
  }
  CHECK(continuous_weight(aw, 3.62, ctx).real() < 0.0);
  CHECK_THROWS_AS(continuous_weight(h, 0.0, QContext(cplx{0.3, 0.1})), DomainError);
}

TEST_CASE("J integral three ways") {
  const QContext q5(0.5);
  const JIntegral j = j_integral(1.0, q5);
  CHECK(j.converged);
  const double want =
      std::pow(0.5, -0.125) / qpoch_infinite(0.5, q5).value.real() * std::sqrt(2 * kPi / std::log(2.0));
  CHECK_REL(j.closed, cplx{want}, 1e-13);
  CHECK_REL(j.unit_interval, j.closed, 1e-9);
  CHECK_REL(j.real_line, j.closed, 1e-9);
  const JIntegral j2 = j_integral(2.0, QContext(0.3));
  CHECK_REL(j2.unit_interval, cplx{orc::kJ_a2_q03}, 1e-9);
  CHECK_REL(j2.real_line, cplx{orc::kJ_a2_q03}, 1e-9);
  CHECK_REL(j2.closed, cplx{orc::kJ_a2_q03}, 1e-13);
}

TEST_CASE("continuous inner products") {
  const QContext q5(0.5);
  const Family h = Family::hermite();
  const double h22 = std::pow(0.5, -1.0) * 0.5 * 0.75 / std::pow(0.5, 2.125) *
                     std::sqrt(2 * kPi / std::log(2.0));
  CHECK_REL(continuous_inner(h, 1.0, 2, 2, q5).value, cplx{h22}, 1e-10);
  CHECK_REL(continuous_inner(h, 1.0, 2, 2, q5).value, cplx{orc::kContH_q05_n2}, 1e-10);
  CHECK_REL(continuous_closed_form(h, 1.0, 2, q5), cplx{h22}, 1e-13);
  CHECK(std::abs(continuous_inner(h, 1.0, 0, 1, q5).value) < 1e-9 * h22);

  const Family asc = Family::al_salam_chihara(0.2, 0.3);
  CHECK_REL(continuous_inner(asc, 1.0, 2, 2, q5).value, cplx{orc::kContASC_q05_n2}, 1e-10);
  CHECK_REL(continuous_closed_form(asc, 1.0, 2, q5), cplx{orc::kContASC_q05_n2}, 1e-10);

  const Family aw = Family::askey_wilson(0.2, 0.3, 0.25, 0.35);
  CHECK_REL(continuous_inner(aw, 1.0, 1, 1, q5).value, cplx{orc::kContAW_q05_n1}, 1e-9);
  CHECK_REL(continuous_closed_form(aw, 1.0, 1, q5), cplx{orc::kContAW_q05_n1}, 1e-9);
  // |abcd| < |q|^{2N-1} fails at N = 2 for these parameters
  const Family big = Family::askey_wilson(0.7, 0.6, 0.6, 0.6);
  CHECK_THROWS_AS(continuous_inner(big, 1.0, 2, 2, q5), DomainError);
}

TEST_CASE("diagonal over K00 does not depend on alpha") {
  const QContext ctx(0.45);
  const Family f = Family::dual_hahn(0.2, 0.3, 0.25);
  for (int n = 0; n <= 2; ++n) {
    const cplx ref = continuous_inner(f, 1.0, n, n, ctx).value / k00(1.0, ctx);
    for (double a : {0.8, 1.3}) {
      CHECK_REL(continuous_inner(f, a, n, n, ctx).value / k00(a, ctx), ref, 1e-7);
    }
  }
}

TEST_CASE("continuous gram") {
  const GramReport g = continuous_gram(Family::big_hermite(0.3), 1.0, 3, QContext(0.5));
  CHECK(g.ok(1e-7));
}

TEST_CASE("lattice sum over one period reproduces the line integral") {
  const QContext q5(0.5);
  const auto h = discrete_to_continuous_check(Family::hermite(), 1.0, 0, 0, q5);
  CHECK(h.converged);
  CHECK_REL(h.real_line, cplx{k00(1.0, q5)}, 1e-8);
  CHECK_REL(h.unit_interval, cplx{k00(1.0, q5)}, 1e-8);
  const auto b = discrete_to_continuous_check(Family::big_hermite(0.3), 1.0, 0, 2, q5);
  CHECK(b.converged);
  CHECK(std::abs(b.real_line) < 1e-8 * b.scale);
  CHECK(std::abs(b.unit_interval) < 1e-8 * b.scale);
  const Family asc = Family::al_salam_chihara(0.2, 0.3);
  const auto a = discrete_to_continuous_check(asc, 1.0, 1, 1, q5);
  const cplx closed = continuous_closed_form(asc, 1.0, 1, q5);
  CHECK_REL(a.real_line, closed, 1e-7);
  CHECK_REL(a.unit_interval, closed, 1e-7);
  CHECK(a.defect < 1e-7);
}

TEST_CASE("q-beta integral") {
  const auto [quad, closed] = qbeta_integral(1.0, {0.2, 0.3, 0.4, 0.5}, QContext(0.4));
  CHECK_REL(quad, closed, 1e-8);
  const auto [q2, c2] = qbeta_integral(1.5, {0.2, 0.3, 0.25, 0.35}, QContext(0.5));
  CHECK_REL(q2, cplx{orc::kQBeta_a15}, 1e-9);
  CHECK_REL(c2, cplx{orc::kQBeta_a15}, 1e-12);
  CHECK_THROWS_AS(qbeta_integral(1.0, {2.0, 2.0, 1.0, 1.0}, QContext(0.5)), DomainError);

  // shrinking the parameters recovers K00; the first-order term cancels
  const QContext ctx(0.5);
  const double base = k00(1.2, ctx);
  const double g1 = std::abs(qbeta_integral(1.2, {1e-3, 2e-3, 3e-3, 4e-3}, ctx).first - base);
  const double g2 = std::abs(qbeta_integral(1.2, {1e-4, 2e-4, 3e-4, 4e-4}, ctx).first - base);
  CHECK(std::abs(std::log10(g1 / g2) - 2.0) < 0.1);
}

TEST_CASE("classical beta integral") {
  const BetaCheck b = beta_integral_check({0.1, 0.2, 0.3, 0.4});
  CHECK(b.converged);
  CHECK_REL(b.closed, orc::kBetaClosed_1234, 1e-14);
  CHECK_REL(b.dougall, b.closed, 1e-9);
  CHECK_REL(b.quadrature, b.closed, 1e-4);
  const BetaCheck z = beta_integral_check({0.0, 0.0, 0.0, 0.0});
  CHECK_REL(z.closed, -1.0 / (2 * kPi * kPi), 1e-15);
  CHECK_REL(z.dougall, z.closed, 1e-9);
  CHECK(std::abs(sin4_integral() - kPi * kPi * kPi / 4.0) < 1e-6);
  CHECK_THROWS_AS(beta_integral_check({-0.5, -0.5, 0.0, -0.1}), DomainError);
}

TEST_CASE("fourier pair") {
  const auto [q0, c0] = ramanujan_fourier_pair(0.5, 0.0);
  CHECK_REL(c0, 2.0, 1e-15);
  CHECK(std::abs(q0 - c0) < 1e-6);
  const auto [q1, c1] = ramanujan_fourier_pair(1.0, kPi / 2);
  CHECK_REL(c1, 1.0, 1e-15);
  CHECK(std::abs(q1 - c1) < 1e-6);
  const auto [q2, c2] = ramanujan_fourier_pair(1.0, 3.5);
  CHECK(c2 == 0.0);
  CHECK(std::abs(q2) < 1e-6);
  const auto [q3, c3] = ramanujan_fourier_pair(1.0, 1.0);
  CHECK_REL(c3, orc::kFourier_a1_t1, 1e-14);
  CHECK(std::abs(q3 - c3) < 1e-6);
  CHECK_THROWS_AS(ramanujan_fourier_pair(-0.6, 1.0), DomainError);
}

TEST_CASE("T constant") {
  const auto t = t_constant_probe({0.9, 0.99, 0.999});
  REQUIRE(t.size() == 3);
  CHECK_REL(t[0], orc::kT_q09, 1e-12);
  CHECK(std::abs(t[2] - kTLimit) < 5e-3);
  CHECK(std::abs(t[1] - kTLimit) > std::abs(t[2] - kTLimit));
  CHECK(std::abs(t[0] - kTLimit) > std::abs(t[1] - kTLimit));
  CHECK_REL(kTLimit, std::pow(2 * kPi, -1.5), 1e-15);
}

}  // TEST_SUITE
