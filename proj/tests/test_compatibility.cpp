#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gptr/compatibility.hpp"
#include "gptr/errors.hpp"
#include "gptr/simulation.hpp"

namespace gptr {
namespace {

using test::eff;
using test::gbit;
using test::gbit_x;
using test::gbit_y;
using test::vec;

// Oracle for the sharp edge meters. A joint G needs G₊₊ <= min(X₊, Y₊) and
// G₋₋ = u − X₊ − Y₊ + G₊₊ >= 0 at every corner, which pins G₊₊ to 1 at (1, 1) and 0
// at the other three corners. An affine function on the square satisfies
// g(1,1) + g(−1,−1) = g(1,−1) + g(−1,1), so no such G exists.
bool edge_joint_exists_by_hand() {
  const auto xs = test::vertex_values(gbit_x()[0], gbit());
  const auto ys = test::vertex_values(gbit_y()[0], gbit());
  std::vector<Rational> lo(4), hi(4);
  for (std::size_t k = 0; k < 4; ++k) {
    hi[k] = std::min(xs[k], ys[k]);
    lo[k] = std::max(Rational(0), Rational(xs[k] + ys[k] - 1));
    if (lo[k] > hi[k]) return false;
  }
  // Vertices are listed (1,1), (1,−1), (−1,−1), (−1,1); the pinned values must satisfy
  // the affine identity.
  for (std::size_t k = 0; k < 4; ++k) {
    if (lo[k] != hi[k]) return true;  // slack: the hand argument does not decide
  }
  return lo[0] + lo[2] == lo[1] + lo[3];
}

TEST(Compatibility, SharpEdgesAreIncompatible) {
  ASSERT_FALSE(edge_joint_exists_by_hand());
  auto res = are_compatible(gbit_x(), gbit_y(), gbit());
  EXPECT_FALSE(res.compatible);
  ASSERT_TRUE(res.certificate.has_value());
  EXPECT_TRUE(verify_compatibility_certificate(gbit_x(), gbit_y(), gbit(), *res.certificate));
  EXPECT_FALSE(verify_compatibility_certificate(gbit_x(), gbit_x(), gbit(), *res.certificate));
}

TEST(Compatibility, SelfCompatible) {
  auto res = are_compatible(gbit_x(), gbit_x(), gbit());
  ASSERT_TRUE(res.compatible);
  EXPECT_TRUE(check_joint_meter(*res.joint, gbit_x(), gbit_x(), gbit()));
}

TEST(Compatibility, TrivialIsCompatibleWithEverything) {
  Meter t = trivial_meter(vec({"1/3", "1/6", "1/2"}), 2);
  auto res = are_compatible(gbit_y(), t, gbit());
  ASSERT_TRUE(res.compatible);
  EXPECT_TRUE(check_joint_meter(*res.joint, gbit_y(), t, gbit()));
  // G_xy = p_y A_x is a joint by construction.
  JointMeter g{2, 3, {}};
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 3; ++y) g.grid.push_back(t[y].constant() * gbit_y()[x]);
  }
  EXPECT_TRUE(check_joint_meter(g, gbit_y(), t, gbit()));
}

TEST(Compatibility, NoisyEdgesBecomeCompatible) {
  // Xn = ½X + ½T and Yn = ½Y + ½T have the joint G_xy = (X_x + Y_y)/4: measure X or Y
  // with probability ½ and output a fair coin for the other label.
  Meter xn({eff("1/2", {"1/4", "0"}), eff("1/2", {"-1/4", "0"})});
  Meter yn({eff("1/2", {"0", "1/4"}), eff("1/2", {"0", "-1/4"})});
  JointMeter by_hand{2, 2, {}};
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) by_hand.grid.push_back(Rational(1, 4) * (gbit_x()[x] + gbit_y()[y]));
  }
  ASSERT_TRUE(check_joint_meter(by_hand, xn, yn, gbit()));
  auto res = are_compatible(xn, yn, gbit());
  ASSERT_TRUE(res.compatible);
  EXPECT_TRUE(check_joint_meter(*res.joint, xn, yn, gbit()));
}

TEST(Compatibility, JointCheckRejectsBadGrids) {
  auto res = are_compatible(gbit_x(), gbit_x(), gbit());
  ASSERT_TRUE(res.compatible);
  JointMeter g = *res.joint;
  g.grid[0] += eff("1/10", {"0", "0"});
  EXPECT_FALSE(check_joint_meter(g, gbit_x(), gbit_x(), gbit()));
}

TEST(Compatibility, CompatSetMembership) {
  EXPECT_TRUE(in_compat_set(gbit_x(), gbit_x(), gbit()));
  EXPECT_FALSE(in_compat_set(gbit_y(), gbit_x(), gbit()));
  EXPECT_TRUE(in_compat_set(trivial_meter(vec({"1/2", "1/2"}), 2), gbit_x(), gbit()));
}

TEST(Compatibility, ClosureUnderSimulation) {
  auto rep = check_compat_closure(gbit_x(), gbit(), 20, 4);
  EXPECT_EQ(rep.violations, 0u);
  EXPECT_GT(rep.members_checked, 0u);
  EXPECT_GT(rep.mixtures_checked, 0u);
  EXPECT_GT(rep.post_processed_checked, 0u);
  EXPECT_GT(rep.trivial_checked, 0u);
}

TEST(Compatibility, BallIsUnsupported) {
  const Meter z({eff("1/2", {"0", "0", "1/2"}), eff("1/2", {"0", "0", "-1/2"})});
  EXPECT_THROW(are_compatible(z, z, StateSpace::ball(3)), UnsupportedError);
}

}  // namespace
}  // namespace gptr
