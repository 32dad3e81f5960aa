#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracle_values.hpp"
#include "qaskey/error.hpp"
#include "qaskey/qcore.hpp"
#include "qaskey/qhyper.hpp"
#include "test_util.hpp"

using namespace qaskey;
namespace orc = qaskey::oracle;

TEST_SUITE("qhyper") {

TEST_CASE("spec detects termination and denominator poles") {
  const QContext ctx(0.5);
  const PhiSpec t({ctx.pow(-4), 0.3}, {0.7}, 0.2, ctx);
  REQUIRE(t.terminating());
  CHECK(*t.terminate_at() == 4);
  // a computed q^{-3} slightly off still counts
  const PhiSpec near({8.0 * (1.0 + 1e-14), 0.3}, {0.7}, 0.2, ctx);
  CHECK(near.terminating());
  CHECK_FALSE(PhiSpec({0.3}, {0.7}, 0.2, ctx).terminating());
  CHECK_THROWS_AS(PhiSpec({0.3}, {ctx.pow(-2)}, 0.2, ctx), PoleError);
  // the sum stops at k = 2 before the denominator factor vanishes
  CHECK_NOTHROW(PhiSpec({ctx.pow(-2)}, {ctx.pow(-5)}, 0.2, ctx));
}

TEST_CASE("basic hypergeometric sums") {
  const QContext q5(0.5);
  CHECK(phi_rs(PhiSpec({0.3}, {}, 0.0, q5), q5).value == cplx{1.0});

  // two surviving terms: 1 - 1/z^2
  const double z = 2.0;
  const auto h = phi_rs(PhiSpec({q5.pow(-1)}, {0.0}, -0.5 / (z * z), q5), q5);
  CHECK_REL(h.value, cplx{0.75}, 1e-15);
  CHECK(h.n_used == 2);

  const QContext q4(0.4);
  const auto r21 = phi_rs(PhiSpec({0.2, 0.3}, {0.5}, 0.6, q4), q4);
  CHECK(r21.converged);
  CHECK_REL(r21.value, cplx{orc::kPhi21_nonterm}, 1e-14);

  // q-binomial theorem
  const auto r10 = phi_rs(PhiSpec({0.3}, {}, 0.7, q5), q5);
  CHECK_REL(r10.value, cplx{orc::kPhi10_nonterm}, 1e-14);
  CHECK_REL(r10.value, qpoch_infinite(0.21, q5).value / qpoch_infinite(0.7, q5).value, 1e-14);

  const QContext q45(0.45);
  const PhiSpec t({q45.pow(-4), 0.7, -1.2}, {0.35, -0.6}, 0.8, q45);
  CHECK_REL(phi_rs(t, q45).value, cplx{orc::kPhi32_term_n4}, 1e-13);
  CHECK_REL(phi_terminating_log(t, q45).value(), cplx{orc::kPhi32_term_n4}, 1e-13);
  CHECK_THROWS_AS(phi_terminating_log(PhiSpec({0.3}, {}, 0.5, q5), q5), DomainError);
}

TEST_CASE("divergent inputs are refused") {
  const QContext ctx(0.5);
  CHECK_THROWS_AS(phi_rs(PhiSpec({0.3, 0.4, 0.2}, {0.1}, 0.2, ctx), ctx), DivergenceError);
  CHECK_THROWS_AS(phi_rs(PhiSpec({0.3, 0.4}, {0.1}, 1.2, ctx), ctx), DivergenceError);
  // terminating 3phi0 is fine whatever z
  CHECK_NOTHROW(phi_rs(PhiSpec({ctx.pow(-3), 0.4, 0.2}, {}, 50.0, ctx), ctx));
}

TEST_CASE("terminating sums are symmetric in their parameter lists") {
  const QContext ctx(0.35);
  std::vector<cplx> num{ctx.pow(-5), 0.7, cplx{-1.1, 0.3}, 2.5};
  std::vector<cplx> den{0.35, -0.6, cplx{0.2, 0.9}};
  const cplx ref = phi_rs(PhiSpec(num, den, 0.35, ctx), ctx).value;
  std::sort(num.begin(), num.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  do {
    std::reverse(den.begin(), den.end());
    CHECK_REL(phi_rs(PhiSpec(num, den, 0.35, ctx), ctx).value, ref, 1e-13);
  } while (std::next_permutation(num.begin(), num.end(),
                                 [](cplx a, cplx b) { return a.real() < b.real(); }));
}

TEST_CASE("bilateral sums") {
  const QContext ctx(0.5);
  const auto delta = bilateral_sum({[](long k) { return cplx{k == 0 ? 1.0 : 0.0}; }, {}}, ctx);
  CHECK(delta.value == cplx{1.0});
  CHECK(delta.converged);

  const auto geo = bilateral_sum({[](long k) { return cplx{std::pow(0.5, std::abs(k))}; },
                                  cplx{0.5}},
                                 ctx);
  CHECK_REL(geo.value, cplx{3.0}, 1e-15);
  CHECK(std::abs(std::abs(geo.ratio_pos) - 0.5) < 1e-12);
  CHECK(std::abs(std::abs(geo.ratio_neg) - 0.5) < 1e-12);
  REQUIRE(geo.hint_mismatch.has_value());
  CHECK(*geo.hint_mismatch < 1e-12);

  // supported on k >= 0: same as the forward sum
  auto one_sided = [](long k) { return k < 0 ? cplx{0.0} : cplx{std::pow(0.3, k) / (1.0 + k)}; };
  cplx forward{0.0};
  for (long k = 0; k < 60; ++k) forward += one_sided(k);
  CHECK_REL(bilateral_sum({one_sided, {}}, ctx).value, forward, 2.3e-16);

  // a tail that never decays exhausts the cap
  const auto flat = bilateral_sum({[](long) { return cplx{1.0}; }, {}}, ctx.with_max_terms(200));
  CHECK_FALSE(flat.converged);
}

TEST_CASE("algebraic bilateral sums and the Dougall 5H5") {
  const auto r = bilateral_sum_algebraic(
      [](long k) {
        const double x = static_cast<double>(k) + 0.5;
        return 1.0 / (x * x * x * x);
      },
      1e-12);
  CHECK(r.converged);
  const double pi4 = std::pow(std::numbers::pi, 4);
  CHECK_REL(r.value, pi4 / 3.0, 1e-11);

  const auto zero = dougall_5h5({0.0, 0.0, 0.0, 0.0});
  CHECK_REL(zero.closed, -1.0 / (2.0 * std::numbers::pi * std::numbers::pi), 1e-15);
  CHECK_REL(zero.direct.value, zero.closed, 1e-9);
  const auto ones = dougall_5h5({1.0, 1.0, 1.0, 1.0});
  CHECK_REL(ones.closed, -3.0 / (16.0 * std::numbers::pi * std::numbers::pi), 1e-14);
  const auto mixed = dougall_5h5({0.1, 0.2, 0.3, 0.4});
  CHECK_REL(mixed.closed, orc::kBetaClosed_1234, 1e-14);
  CHECK_REL(mixed.direct.value, orc::kBetaClosed_1234, 1e-9);
  CHECK_THROWS_AS(dougall_5h5({-0.3, -0.3, -0.3, -0.3}), DivergenceError);
}

}  // TEST_SUITE
