#pragma once

#include <cstdint>
#include <optional>

#include "gptr/lp.hpp"
#include "gptr/meter.hpp"
#include "gptr/sampling.hpp"

namespace gptr {

/// Effects G_xy over Ω_A × Ω_B with Σ_y G_xy = A_x and Σ_x G_xy = B_y.
struct JointMeter {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Effect> grid;  // row-major
  const Effect& at(std::size_t x, std::size_t y) const { return grid[x * cols + y]; }
  bool operator==(const JointMeter&) const = default;
};

struct CompatibilityResult {
  bool compatible = false;
  std::optional<JointMeter> joint;
  /// Farkas certificate for compatibility_program(A, B, S).
  std::optional<FarkasCertificate> certificate;
  bool operator==(const CompatibilityResult&) const = default;
};

/// Free variables: the dual coordinates of every G_xy. Constraints: both marginal
/// families as coordinate equalities and G_xy(v_k) >= 0 at every vertex.
LinearProgram compatibility_program(const Meter& a, const Meter& b, const StateSpace& s);

/// A and B are compatible iff a joint meter exists: a common simulator C gives
/// G_xy = Σ_z ν^A_zx ν^B_zy C_z, and G simulates both through its marginals.
/// Polytope backend; UnsupportedError otherwise.
CompatibilityResult are_compatible(const Meter& a, const Meter& b, const StateSpace& s);

bool verify_compatibility_certificate(const Meter& a, const Meter& b, const StateSpace& s,
                                      const FarkasCertificate& cert);

/// Marginals reproduce A and B exactly and every G_xy is a valid effect.
bool check_joint_meter(const JointMeter& g, const Meter& a, const Meter& b, const StateSpace& s);

/// D ∈ C(A).
bool in_compat_set(const Meter& d, const Meter& a, const StateSpace& s);

/// Random member of C(A): each A_x is split into `outcomes` cone elements G_xy and the
/// second marginal is returned.
Meter sample_compatible(Rng& rng, const Meter& a, const StateSpace& s, std::size_t outcomes);

struct CompatClosureReport {
  std::size_t members_checked = 0;
  std::size_t mixtures_checked = 0;
  std::size_t post_processed_checked = 0;
  std::size_t trivial_checked = 0;
  std::size_t violations = 0;
};

/// Samples members of C(A), forms mixtures and post-processings, and re-tests membership.
CompatClosureReport check_compat_closure(const Meter& a, const StateSpace& s, std::size_t samples, std::uint64_t seed);

}  // namespace gptr
