#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "gptr/errors.hpp"
#include "gptr/sampling.hpp"
#include "gptr/state_space.hpp"

namespace gptr {
namespace {

using test::eff;
using test::gbit;
using test::q;
using test::vec;

TEST(StateSpace, PolytopeValidation) {
  EXPECT_EQ(gbit().dimension(), 2u);
  EXPECT_EQ(gbit().embedding_dimension(), 3u);
  // The centre is a convex combination of the corners.
  EXPECT_THROW(StateSpace::polytope({vec({"1", "1"}), vec({"1", "-1"}), vec({"-1", "-1"}), vec({"-1", "1"}), vec({"0", "0"})}),
               ValidationError);
  // Collinear points do not span the plane.
  EXPECT_THROW(StateSpace::polytope({vec({"0", "0"}), vec({"1", "1"}), vec({"2", "2"})}), ValidationError);
  EXPECT_THROW(StateSpace::polytope({}), ValidationError);
  EXPECT_THROW(StateSpace::ball(3).vertices(), UnsupportedError);
}

TEST(StateSpace, Membership) {
  EXPECT_TRUE(gbit().contains(vec({"1/2", "-1"})));
  EXPECT_FALSE(gbit().contains(vec({"3/2", "0"})));
  EXPECT_TRUE(StateSpace::ball(3).contains(vec({"0", "0", "1"})));
  EXPECT_FALSE(StateSpace::ball(3).contains(vec({"1", "1", "0"})));
}

TEST(Effect, Evaluation) {
  const Effect e = eff("1/2", {"1/2", "0"});
  EXPECT_EQ(evaluate(Effect::unit(2), gbit(), vec({"1/3", "-1"})), 1);
  EXPECT_EQ(evaluate(e, gbit(), vec({"1", "1"})), 1);
  EXPECT_EQ(evaluate(e, gbit(), vec({"-1", "1"})), 0);
  EXPECT_THROW(evaluate(e, gbit(), vec({"2", "0"})), DomainError);
}

TEST(Effect, LambdaValuesPolytope) {
  const Effect e = eff("1/2", {"1/2", "0"});
  EXPECT_EQ(lambda_max(e, gbit()), ExtremeValue(1));
  EXPECT_EQ(lambda_min(e, gbit()), ExtremeValue(0));
  // Oracle: direct vertex values.
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    Effect f = random_effect(rng, gbit());
    auto vals = test::vertex_values(f, gbit());
    EXPECT_EQ(lambda_max(f, gbit()), ExtremeValue(*std::max_element(vals.begin(), vals.end())));
    EXPECT_EQ(lambda_min(f, gbit()), ExtremeValue(*std::min_element(vals.begin(), vals.end())));
    EXPECT_TRUE(is_valid_effect(f, gbit()));
  }
}

TEST(Effect, LambdaValuesBall) {
  const StateSpace ball = StateSpace::ball(3);
  const Effect p = eff("1/2", {"0", "0", "1/2"});
  EXPECT_EQ(lambda_max(p, ball), ExtremeValue(1));
  EXPECT_EQ(lambda_min(p, ball), ExtremeValue(0));
  const Effect f = eff("1/2", {"1/4", "1/4", "0"});
  EXPECT_EQ(lambda_max(f, ball), ExtremeValue(Rational(1, 2)) + ExtremeValue::sqrt(Rational(1, 8)));
}

TEST(Effect, CheckReportsViolatingVertex) {
  auto check = check_effect(eff("-1/10", {"0", "0"}), gbit());
  EXPECT_FALSE(check.valid);
  ASSERT_TRUE(check.violating_vertex.has_value());
  EXPECT_EQ(*check.violating_value, q("-1/10"));
  auto ball = check_effect(eff("1/2", {"1/2", "1/2", "0"}), StateSpace::ball(3));
  EXPECT_FALSE(ball.valid);
  EXPECT_TRUE(check_effect(eff("1/2", {"1/2", "0"}), gbit()).valid);
}

TEST(Meter, NormalizationEnforced) {
  EXPECT_THROW(Meter({eff("0.45", {"1/4", "0"}), eff("0.45", {"-1/4", "0"})}), ValidationError);
  EXPECT_THROW(Meter(std::vector<Effect>{}), ValidationError);
  EXPECT_THROW(Meter({eff("1/2", {"0"}), eff("1/2", {"0", "0"})}), DimensionError);
  auto check = check_meter({eff("0.45", {"1/4", "0"}), eff("0.45", {"-1/4", "0"})}, gbit());
  EXPECT_FALSE(check.valid);
  ASSERT_FALSE(check.problems.empty());
  EXPECT_NE(check.problems.front().find("normalization violated"), std::string::npos);
}

TEST(Meter, DichotomicIdentity) {
  const Effect e = eff("1/3", {"1/6", "-1/12"});
  Meter a = dichotomic(e);
  EXPECT_EQ(lambda_max(a[1], gbit()), ExtremeValue(1) - lambda_min(a[0], gbit()));
}

TEST(Meter, Ranges) {
  const Effect e = eff("1/2", {"1/2", "0"});
  auto ran = meter_range(dichotomic(e));
  std::vector<Effect> expected{Effect::zero(2), e, Effect::unit(2) - e, Effect::unit(2)};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(ran, expected);

  auto trivial = meter_range(trivial_meter(vec({"1/2", "1/2"}), 2));
  EXPECT_EQ(trivial.size(), 3u);
  EXPECT_NE(std::find(trivial.begin(), trivial.end(), Effect::unit(2) * Rational(1, 2)), trivial.end());

  // 3 distinct, pairwise independent effects: every one of the 2³ subsets gives a new sum.
  Meter three({eff("1/4", {"1/4", "0"}), eff("1/4", {"0", "1/4"}), eff("1/2", {"-1/4", "-1/4"})});
  EXPECT_EQ(meter_range(three).size(), 8u);

  std::vector<Effect> many(21, Effect::unit(1) * Rational(1, 21));
  EXPECT_THROW(meter_range(Meter(many)), ResourceError);
}

TEST(Meter, Triviality) {
  EXPECT_TRUE(is_trivial(trivial_meter(vec({"1/4", "3/4"}), 2)));
  EXPECT_FALSE(is_trivial(test::gbit_x()));
  EXPECT_THROW(trivial_meter(vec({"1/2", "1/3"}), 2), ValidationError);
}

TEST(Indecomposable, PolytopeAndBall) {
  EXPECT_TRUE(is_indecomposable(eff("1/2", {"1/2", "0"}), gbit()));
  EXPECT_FALSE(is_indecomposable(Effect::unit(2), gbit()));
  EXPECT_TRUE(is_indecomposable(eff("1/2", {"0", "0", "1/2"}), StateSpace::ball(3)));
  EXPECT_FALSE(is_indecomposable(eff("1/2", {"0", "0", "1/4"}), StateSpace::ball(3)));
  EXPECT_THROW(is_indecomposable(Effect::zero(2), gbit()), DomainError);
}

TEST(Indecomposable, DecomposeBall) {
  const StateSpace ball = StateSpace::ball(3);
  const Effect p = eff("1/2", {"0", "0", "1/2"});
  auto same = decompose_indecomposable_exact(p, ball);
  ASSERT_EQ(same.size(), 1u);
  EXPECT_EQ(same[0], p);
  auto u = decompose_indecomposable_exact(Effect::unit(3), ball);
  ASSERT_EQ(u.size(), 2u);
  EXPECT_EQ(u[0] + u[1], Effect::unit(3));
  EXPECT_EQ(u[0], p);
  EXPECT_EQ(u[1], eff("1/2", {"0", "0", "-1/2"}));
}

TEST(Indecomposable, DecomposeIrrationalBallEffect) {
  const StateSpace ball = StateSpace::ball(3);
  const Effect f = eff("1/2", {"1/4", "1/4", "0"});
  auto parts = decompose_indecomposable(f, ball);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_FALSE(parts[0].exact().has_value());
  EXPECT_EQ(parts[0].constant + parts[1].constant, ExtremeValue(Rational(1, 2)));
  EXPECT_THROW(decompose_indecomposable_exact(f, ball), UnsupportedError);
}

TEST(Indecomposable, DecomposeGbitEffects) {
  Rng rng(5);
  std::vector<Effect> samples{Effect::unit(2)};
  for (int i = 0; i < 20; ++i) samples.push_back(random_effect(rng, gbit()));
  for (const auto& e : samples) {
    if (e.is_zero()) continue;
    auto parts = decompose_indecomposable_exact(e, gbit());
    Effect total = Effect::zero(2);
    for (const auto& p : parts) {
      EXPECT_TRUE(is_indecomposable(p, gbit()));
      total += p;
    }
    EXPECT_EQ(total, e);
  }
  EXPECT_EQ(decompose_indecomposable_exact(Effect::unit(2), gbit()).size(), 2u);
}

}  // namespace
}  // namespace gptr
