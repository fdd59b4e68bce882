#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "gptr/errors.hpp"
#include "gptr/simulation.hpp"

namespace gptr {
namespace {

using test::eff;
using test::gbit;
using test::gbit_x;
using test::gbit_y;
using test::vec;

Matrix rows(std::initializer_list<Vector> r) { return Matrix::from_rows(r); }

TEST(PostProcessing, RejectsNonStochastic) {
  EXPECT_THROW(PostProcessing(rows({vec({"1/2", "1/3"})})), ValidationError);
  EXPECT_THROW(PostProcessing(rows({vec({"3/2", "-1/2"})})), ValidationError);
}

TEST(PostProcessing, IdentityMergeAndSwap) {
  Meter x = gbit_x();
  EXPECT_EQ(post_process(PostProcessing::identity(2), x), x);
  Meter merged = post_process(PostProcessing(rows({vec({"1"}), vec({"1"})})), x);
  EXPECT_EQ(merged, Meter({Effect::unit(2)}));
  Meter swapped = post_process(PostProcessing(rows({vec({"0", "1"}), vec({"1", "0"})})), x);
  EXPECT_EQ(swapped[0], x[1]);
  EXPECT_EQ(swapped[1], x[0]);
  EXPECT_THROW(post_process(PostProcessing::identity(3), x), DimensionError);
}

TEST(Mix, Basics) {
  Meter x = gbit_x();
  EXPECT_EQ(mix({x, x}, vec({"1/2", "1/2"})), x);
  Meter t1 = trivial_meter(vec({"1/4", "3/4"}), 2);
  Meter t2 = trivial_meter(vec({"1", "0"}), 2);
  EXPECT_TRUE(is_trivial(mix({t1, t2}, vec({"1/3", "2/3"}))));
  EXPECT_THROW(mix({x, x}, vec({"1/2", "1/3"})), ValidationError);
}

TEST(Mix, EdgeMetersOnTheSquare) {
  // Oracle: ½(X₁ + Y₁) = 1/2 + x₁/4 + x₂/4 reaches 1 at the corner (1, 1).
  Meter m = mix({gbit_x(), gbit_y()}, vec({"1/2", "1/2"}));
  for (const auto& e : m.effects()) {
    auto vals = test::vertex_values(e, gbit());
    EXPECT_EQ(*std::max_element(vals.begin(), vals.end()), 1);
    EXPECT_EQ(lambda_max(e, gbit()), ExtremeValue(1));
  }
}

TEST(Mix, EdgeMetersOnTheDiamond) {
  // Same gbit with vertices (±1, 0), (0, ±1): the mixture peaks at 3/4.
  StateSpace diamond = StateSpace::polytope({vec({"1", "0"}), vec({"0", "1"}), vec({"-1", "0"}), vec({"0", "-1"})});
  Meter m = mix({gbit_x(), gbit_y()}, vec({"1/2", "1/2"}));
  for (const auto& e : m.effects()) {
    auto vals = test::vertex_values(e, diamond);
    EXPECT_EQ(*std::max_element(vals.begin(), vals.end()), Rational(3, 4));
    EXPECT_EQ(lambda_max(e, diamond), ExtremeValue(Rational(3, 4)));
  }
}

TEST(Simulable, GeneratorIsPointMass) {
  auto res = simulable(gbit_x(), {gbit_y(), gbit_x()});
  ASSERT_TRUE(res.simulable);
  ASSERT_TRUE(res.witness.has_value());
  EXPECT_EQ(reconstruct(*res.witness, {gbit_y(), gbit_x()}), gbit_x());
}

TEST(Simulable, TrivialFromAnything) {
  Meter t = trivial_meter(vec({"1/5", "3/10", "1/2"}), 2);
  auto res = simulable(t, {gbit_x()});
  ASSERT_TRUE(res.simulable);
  EXPECT_EQ(reconstruct(*res.witness, {gbit_x()}), t);
}

TEST(Simulable, EdgeMetersAreMutuallyUnreachable) {
  // Oracle: Y₁ is outside span{u, X₁}, so no post-processing of X reproduces it.
  Matrix span = Matrix::from_rows({Effect::unit(2).coords(), gbit_x()[0].coords()});
  Matrix with_y = span;
  with_y.append_row(gbit_y()[0].coords());
  ASSERT_EQ(rank(with_y), rank(span) + 1);

  auto res = simulable(gbit_y(), {gbit_x()});
  EXPECT_FALSE(res.simulable);
  ASSERT_TRUE(res.certificate.has_value());
  EXPECT_TRUE(verify_simulation_certificate(gbit_y(), {gbit_x()}, *res.certificate));
  EXPECT_FALSE(verify_simulation_certificate(gbit_x(), {gbit_x()}, *res.certificate));
}

TEST(Simulable, BallMetersUseTheSameProgram) {
  const Meter z({eff("1/2", {"0", "0", "1/2"}), eff("1/2", {"0", "0", "-1/2"})});
  const Meter zn({eff("1/2", {"0", "0", "1/4"}), eff("1/2", {"0", "0", "-1/4"})});
  EXPECT_TRUE(simulable(zn, {z}).simulable);
  EXPECT_FALSE(simulable(z, {zn}).simulable);
}

TEST(ClosureAxioms, SmallRun) {
  auto report = check_closure_axioms({gbit_x(), gbit_y()}, 20, 3);
  EXPECT_EQ(report.violations(), 0u);
  EXPECT_GT(report.sim1_checked, 0u);
  EXPECT_GT(report.sim2_checked, 0u);
  EXPECT_GT(report.sim3_checked, 0u);
}

TEST(NormalizeDichotomic, AlreadyNormalized) {
  auto n = normalize_dichotomic(gbit_x(), gbit());
  EXPECT_EQ(n.normalized, gbit_x());
  EXPECT_EQ(n.recovery, PostProcessing::identity(2));
}

TEST(NormalizeDichotomic, NoisyEdge) {
  // λmax(A₁) = λmax(A₂) = 3/4, α = 1/2: A′₁ = 2A₁ − (1/2)u = (1/2, (1/2, 0)).
  Meter a({eff("1/2", {"1/4", "0"}), eff("1/2", {"-1/4", "0"})});
  auto n = normalize_dichotomic(a, gbit());
  EXPECT_EQ(n.normalized[0], eff("1/2", {"1/2", "0"}));
  EXPECT_EQ(post_process(n.recovery, n.normalized), a);
  for (const auto& e : n.normalized.effects()) {
    EXPECT_EQ(lambda_max(e, gbit()), ExtremeValue(1));
    EXPECT_EQ(lambda_min(e, gbit()), ExtremeValue(0));
  }
  EXPECT_THROW(normalize_dichotomic(trivial_meter(vec({"1/2", "1/2"}), 2), gbit()), DomainError);
}

TEST(NTomic, DichotomicIsTwoTomic) {
  auto c = certify_n_tomic(gbit_x(), 2, gbit());
  EXPECT_EQ(c.verdict, NTomicVerdict::CertifiedNTomic);
  EXPECT_EQ(c.route, NTomicRoute::OutcomeCount);
  EXPECT_TRUE(verify_n_tomic_certificate(c, gbit_x(), gbit()));
}

TEST(NTomic, LambdaMaxSumOnTriangle) {
  // Triangle state space: the three vertex indicator effects discriminate perfectly,
  // Σλmax = 3 > 2.
  StateSpace tri = StateSpace::polytope({vec({"0", "0"}), vec({"1", "0"}), vec({"0", "1"})});
  Meter a({eff("1", {"-1", "-1"}), eff("0", {"1", "0"}), eff("0", {"0", "1"})});
  auto c = certify_n_tomic(a, 2, tri);
  EXPECT_EQ(c.verdict, NTomicVerdict::CertifiedNotNTomic);
  EXPECT_EQ(c.route, NTomicRoute::LambdaMaxSum);
  EXPECT_EQ(c.sum, ExtremeValue(3));
  EXPECT_TRUE(verify_n_tomic_certificate(c, a, tri));
  EXPECT_EQ(certify_n_tomic(a, 3, tri).verdict, NTomicVerdict::CertifiedNTomic);
}

TEST(NTomic, ComplementRoute) {
  // A₂ + A₃ has λmax sum 1/4 + 1/4 <= 1, so A is effectively dichotomic.
  Meter a({eff("1/2", {"0", "0"}), eff("1/4", {"0", "0"}), eff("1/4", {"0", "0"})});
  auto c = certify_n_tomic(a, 2, gbit());
  EXPECT_EQ(c.verdict, NTomicVerdict::CertifiedNTomic);
  EXPECT_EQ(c.route, NTomicRoute::LambdaMaxComplement);
  EXPECT_TRUE(verify_n_tomic_certificate(c, a, gbit()));
}

TEST(NTomic, QuadIsUndecided) {
  Meter quad({eff("1/4", {"1/4", "0"}), eff("1/4", {"-1/4", "0"}), eff("1/4", {"0", "1/4"}), eff("1/4", {"0", "-1/4"})});
  auto c = certify_n_tomic(quad, 2, gbit());
  EXPECT_EQ(c.verdict, NTomicVerdict::Undecided);
  EXPECT_TRUE(verify_n_tomic_certificate(c, quad, gbit()));
}

TEST(NTomic, TamperedCertificateFails) {
  auto c = certify_n_tomic(gbit_x(), 2, gbit());
  c.verdict = NTomicVerdict::CertifiedNotNTomic;
  EXPECT_FALSE(verify_n_tomic_certificate(c, gbit_x(), gbit()));
}

TEST(PairConditions, ProportionalAndCompleting) {
  const Effect e = eff("1/2", {"1/2", "0"});
  EXPECT_TRUE(positively_proportional(e, e * Rational(1, 3)));
  EXPECT_FALSE(positively_proportional(e, eff("1/2", {"-1/2", "0"})));
  EXPECT_TRUE(completes_unit(e, eff("1/4", {"-1/4", "0"})));
  EXPECT_FALSE(completes_unit(e, eff("1/2", {"0", "1/2"})));
  EXPECT_FALSE(completes_unit(e, e));
}

}  // namespace
}  // namespace gptr
