#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

#include "fixtures.hpp"
#include "gptr/errors.hpp"
#include "gptr/qubit.hpp"
#include "gptr/restrictions.hpp"

namespace gptr {
namespace {

using test::eff;
using test::vec;

// Independent double-precision oracle for the unrestricted optimum: scan symmetric
// q on a fine grid, q valid iff (1 − q)² >= q²(1 + κ)/2.
double scan_symmetric_optimum(double kappa) {
  double best = 0;
  for (int i = 0; i <= 200000; ++i) {
    double qv = i / 200000.0;
    double c = 1 - qv;
    if (c * c + 1e-15 < qv * qv * (1 + kappa) / 2) break;
    best = std::max(best, qv * (1 - (1 + kappa) / 2));
  }
  return best;
}

TEST(PureQubitState, OverlapAndProjector) {
  PureQubitState z(vec({"0", "0", "1"}));
  PureQubitState x(vec({"1", "0", "0"}));
  EXPECT_EQ(overlap_sq(z, x), Rational(1, 2));
  EXPECT_EQ(overlap_sq(z, PureQubitState(vec({"0", "0", "-1"}))), 0);
  EXPECT_EQ(z.projector(), eff("1/2", {"0", "0", "1/2"}));
  EXPECT_THROW(PureQubitState(vec({"1", "1", "0"})), ValidationError);
  EXPECT_THROW(PureQubitState(vec({"1", "0"})), ValidationError);
}

TEST(UdMeter, SuccessExamples) {
  EXPECT_EQ(ud_success(UdMeter(1, 1, -1)), 1);
  EXPECT_EQ(ud_success(UdMeter(Rational(1, 2), Rational(1, 2), 0)), Rational(1, 4));
  EXPECT_EQ(ud_success(UdMeter(Rational(1, 3), Rational(1, 5), 1)), 0);
}

TEST(UdMeter, ValidityMatchesExplicitEffects) {
  PureQubitState z(vec({"0", "0", "1"}));
  PureQubitState x(vec({"1", "0", "0"}));
  UdMeter m(Rational(1, 2), Rational(1, 2), z, x);
  ASSERT_TRUE(m.meter().has_value());
  const Meter a = *m.meter();
  const StateSpace ball = StateSpace::ball(3);
  EXPECT_TRUE(check_meter(a.effects(), ball).valid);
  // A₁ annihilates the second state and A₂ the first.
  EXPECT_EQ(evaluate(a[0], ball, x.bloch()), 0);
  EXPECT_EQ(evaluate(a[1], ball, z.bloch()), 0);
  EXPECT_EQ(meter_range(a).size(), 8u);
  // c = 1/2, ‖v‖² = (1/4 + 1/4)/4 = 1/8.
  EXPECT_EQ(m.inconclusive_constant(), Rational(1, 2));
  EXPECT_EQ(m.inconclusive_norm_sq(), Rational(1, 8));
}

TEST(UdMeter, InvalidParametersRejected) {
  // c = 0.4, ‖v‖² = 0.36/2 = 0.18 > 0.16.
  EXPECT_FALSE(ud_parameters_valid(Rational(3, 5), Rational(3, 5), 0));
  EXPECT_THROW(UdMeter(Rational(3, 5), Rational(3, 5), 0), DomainError);
  // Overlap 1/2 rather than overlap² 1/2: κ = −1/2 and ‖v‖² = 0.36/4 = 0.09 <= 0.16.
  EXPECT_TRUE(ud_parameters_valid(Rational(3, 5), Rational(3, 5), Rational(-1, 2)));
  EXPECT_FALSE(ud_parameters_valid(Rational(3, 5), Rational(3, 5), Rational(1, 2)));
  EXPECT_THROW(UdMeter(0, Rational(1, 2), 0), DomainError);
}

TEST(UdBounds, Formulas) {
  EXPECT_EQ(ud_dichotomic_bound(0), Rational(1, 4));
  EXPECT_EQ(ud_unrestricted_optimum(0), ExtremeValue(1) - ExtremeValue::sqrt(Rational(1, 2)));
  EXPECT_EQ(ud_dichotomic_bound(-1), Rational(1, 2));
  EXPECT_EQ(ud_unrestricted_optimum(-1), ExtremeValue(1));
  EXPECT_EQ(ud_dichotomic_bound(1), 0);
  EXPECT_EQ(ud_unrestricted_optimum(1), ExtremeValue(0));
}

TEST(UdOptimizer, MatchesClosedFormAndScan) {
  for (const char* k : {"0", "-1/2", "1/3", "-9/10"}) {
    const Rational kappa = test::q(k);
    auto opt = ud_max_valid_q(kappa, UdConstraint::None);
    EXPECT_TRUE(ud_parameters_valid(opt.q1, opt.q2, kappa));
    EXPECT_NEAR(to_double(opt.success), ud_unrestricted_optimum(kappa).approx(), 1e-6) << k;
    EXPECT_NEAR(to_double(opt.success), scan_symmetric_optimum(to_double(kappa)), 1e-4) << k;
    EXPECT_LE(ExtremeValue(opt.success), ud_unrestricted_optimum(kappa));
  }
}

TEST(UdOptimizer, DichotomicConstraint) {
  auto opt = ud_max_valid_q(0, UdConstraint::SumAtMostOne);
  EXPECT_EQ(opt.success, Rational(1, 4));
  EXPECT_EQ(opt.q1 + opt.q2, 1);
  EXPECT_EQ(opt.q1, Rational(1, 2));
  auto orth = ud_max_valid_q(-1, UdConstraint::SumAtMostOne);
  EXPECT_EQ(orth.success, Rational(1, 2));
  auto orth_free = ud_max_valid_q(-1, UdConstraint::None);
  EXPECT_EQ(orth_free.success, 1);
}

TEST(UdOptimizer, MaxSymmetricQ) {
  ExtremeValue qmax = ud_max_symmetric_q(0);
  EXPECT_NEAR(qmax.approx(), 1 / (1 + 1 / std::sqrt(2.0)), 1e-12);
  EXPECT_LT(qmax, ExtremeValue(Rational(3, 5)));
  EXPECT_GT(qmax, ExtremeValue(Rational(1, 2)));
}

TEST(UdNot2Tomic, CertificateWhenSumExceedsOne) {
  // κ = −1/2 keeps q = 3/5 valid: c = 2/5, ‖v‖² = (9/25)(1/2)/2 = 9/100 < 4/25.
  UdMeter m(Rational(3, 5), Rational(3, 5), Rational(-1, 2));
  auto c = ud_not_2tomic_certificate(m);
  EXPECT_EQ(c.verdict, NTomicVerdict::CertifiedNotNTomic);
  EXPECT_EQ(c.route, NTomicRoute::IndecomposableFamily);
  EXPECT_EQ(c.sum, ExtremeValue(Rational(6, 5)));
}

TEST(UdNot2Tomic, HypothesesFail) {
  EXPECT_THROW(ud_not_2tomic_certificate(UdMeter(Rational(2, 5), Rational(2, 5), 0)), DomainError);
  EXPECT_THROW(ud_not_2tomic_certificate(UdMeter(1, 1, -1)), DomainError);
}

TEST(UdNot2Tomic, GeneralCertifierAgreesOnExplicitMeter) {
  PureQubitState n1(vec({"0", "0", "1"}));
  PureQubitState n2(vec({"4/5", "0", "-3/5"}));
  UdMeter m(Rational(3, 5), Rational(3, 5), n1, n2);
  auto c = certify_n_tomic(*m.meter(), 2, StateSpace::ball(3));
  EXPECT_EQ(c.verdict, NTomicVerdict::CertifiedNotNTomic);
  EXPECT_TRUE(verify_n_tomic_certificate(c, *m.meter(), StateSpace::ball(3)));
}

TEST(Depolarize, Maps) {
  const Effect p = eff("1/2", {"0", "0", "1/2"});
  EXPECT_EQ(depolarize_effect(p, 1), p);
  EXPECT_EQ(depolarize_effect(p, 0), Effect::unit(3) * Rational(1, 2));
  EXPECT_EQ(depolarize_effect(p, Rational(1, 2)), eff("1/2", {"0", "0", "1/4"}));
  // Ψ*_{t,ξ} with ξ = 0 is Φ*_t.
  EXPECT_EQ(shifted_depolarize_effect(p, Rational(1, 2), vec({"0", "0", "0"})), depolarize_effect(p, Rational(1, 2)));
  EXPECT_EQ(shifted_depolarize_effect(p, Rational(1, 2), vec({"0", "0", "1"})), eff("3/4", {"0", "0", "1/4"}));
}

TEST(Depolarize, Commutation) {
  EXPECT_TRUE(commutes_sharp(Effect::unit(3) * Rational(1, 3), eff("1/2", {"1/2", "0", "0"})));
  EXPECT_TRUE(commutes_sharp(eff("1/2", {"0", "0", "1/2"}), eff("1/2", {"0", "0", "1/4"})));
  EXPECT_FALSE(commutes_sharp(eff("1/2", {"1/2", "0", "0"}), eff("1/2", {"0", "1/2", "0"})));
}

TEST(UdPolytope, InscribedAndCircumscribedBracketTheBall) {
  const Vector n1 = vec({"0", "0", "1"});
  const Vector n2 = vec({"1", "0", "0"});
  const double ball = ud_unrestricted_optimum(0).approx();
  const Rational inscribed = ud_polytope_optimum(test::octahedron(), n1, n2);
  EXPECT_GE(to_double(inscribed), ball - 1e-12);
  // The cube contains the ball, so its effects are a subset: a lower bound. The states
  // must be points of the cube, which (0,0,1) and (1,0,0) are.
  const Rational circumscribed = ud_polytope_optimum(test::cube(), n1, n2);
  EXPECT_LE(to_double(circumscribed), ball + 1e-12);
  EXPECT_THROW(ud_polytope_optimum(test::octahedron(), vec({"1", "1", "0"}), n2), DomainError);
}

TEST(UdTiming, OptimizerIsFast) {
  auto start = std::chrono::steady_clock::now();
  (void)ud_max_valid_q(Rational(1, 7), UdConstraint::None);
  auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_LT(std::chrono::duration<double>(elapsed).count(), 1.0);
}

}  // namespace
}  // namespace gptr
